// Copyright 2026 The edit-lens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDIT_LENS_STATS_H_
#define EDIT_LENS_STATS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "edit_lens/metrics.h"

namespace edit_lens {

enum class SigTest { kBootstrap, kZTest, kApproxRandomization };

const char* SigTestName(SigTest test);

struct SignificanceResult {
  SigTest test = SigTest::kBootstrap;
  double p_value = 1.0;
  double statistic = 0.0;
  int iterations = 0;  // 0 for the z-test
  std::uint64_t seed = 0;
  std::optional<double> significant_at;  // echoes alpha when p < alpha

  void MarkLevel(double alpha);
};

inline constexpr std::uint64_t kDefaultSeed = 20151203;

// mt19937_64 with a portable bounded draw (rejection sampling on the raw
// 64-bit output), so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// One-sided paired bootstrap for "A has the lower corpus ratio". Each
// iteration resamples segment indices with replacement; p = (c + 1) / (R +
// 1) where c counts resamples with ratio(A) >= ratio(B). statistic is
// 100 * (ratio(A) - ratio(B)) on the full sample.
SignificanceResult PairedBootstrap(std::span<const SegmentStat> a, std::span<const SegmentStat> b,
                                   int iterations = 1000, std::uint64_t seed = kDefaultSeed);

// Pooled two-proportion z-test, one-tailed for proportion A < proportion B:
// p = Phi(z).
SignificanceResult ZTestProportions(long count_a, long total_a, long count_b, long total_b);

// One-sided approximate randomization for "A has the higher mean". Each
// iteration swaps every pair with probability 1/2; p = (c + 1) / (R + 1)
// where c counts shuffles whose mean difference >= the observed one.
SignificanceResult ApproxRandomization(std::span<const double> a, std::span<const double> b,
                                       int iterations = 10000,
                                       std::uint64_t seed = kDefaultSeed);

// Sample Pearson correlation. Throws ComputeError on fewer than 3 points,
// length mismatch or a constant input ("correlation undefined").
double Pearson(std::span<const double> x, std::span<const double> y);

double NormalCdf(double z);

}  // namespace edit_lens

#endif  // EDIT_LENS_STATS_H_
