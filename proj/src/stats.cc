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

#include "edit_lens/stats.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "edit_lens/errors.h"

namespace edit_lens {

const char* SigTestName(SigTest test) {
  switch (test) {
    case SigTest::kBootstrap: return "bootstrap";
    case SigTest::kZTest: return "ztest";
    case SigTest::kApproxRandomization: return "approx_random";
  }
  return "?";
}

void SignificanceResult::MarkLevel(double alpha) {
  if (p_value < alpha) {
    significant_at = alpha;
  } else {
    significant_at.reset();
  }
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

SignificanceResult PairedBootstrap(std::span<const SegmentStat> a, std::span<const SegmentStat> b,
                                   int iterations, std::uint64_t seed) {
  if (a.size() != b.size()) {
    throw ComputeError("bootstrap: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + " segments");
  }
  if (a.empty()) throw ComputeError("bootstrap: no segments");
  if (iterations < 1) throw InputError("bootstrap: iterations must be >= 1");

  double ea = 0, la = 0, eb = 0, lb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ea += a[i].numerator;
    la += a[i].denominator;
    eb += b[i].numerator;
    lb += b[i].denominator;
  }
  SignificanceResult result;
  result.test = SigTest::kBootstrap;
  result.iterations = iterations;
  result.seed = seed;
  result.statistic = (la > 0 && lb > 0) ? 100.0 * (ea / la - eb / lb) : 0.0;

  Rng rng(seed);
  const std::uint64_t n = a.size();
  long not_better = 0;
  for (int it = 0; it < iterations; ++it) {
    double sea = 0, sla = 0, seb = 0, slb = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::size_t i = static_cast<std::size_t>(rng.Below(n));
      sea += a[i].numerator;
      sla += a[i].denominator;
      seb += b[i].numerator;
      slb += b[i].denominator;
    }
    // ratio(A) >= ratio(B), cross-multiplied
    if (sea * slb >= seb * sla) ++not_better;
  }
  result.p_value = static_cast<double>(not_better + 1) / static_cast<double>(iterations + 1);
  return result;
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

SignificanceResult ZTestProportions(long count_a, long total_a, long count_b, long total_b) {
  if (total_a <= 0 || total_b <= 0) throw ComputeError("z-test: totals must be positive");
  if (count_a < 0 || count_b < 0 || count_a > total_a || count_b > total_b) {
    throw ComputeError("z-test: counts must lie in [0, total]");
  }
  const double pa = static_cast<double>(count_a) / static_cast<double>(total_a);
  const double pb = static_cast<double>(count_b) / static_cast<double>(total_b);
  const double pooled = static_cast<double>(count_a + count_b) /
                        static_cast<double>(total_a + total_b);
  const double se = std::sqrt(pooled * (1.0 - pooled) *
                              (1.0 / static_cast<double>(total_a) +
                               1.0 / static_cast<double>(total_b)));
  SignificanceResult result;
  result.test = SigTest::kZTest;
  if (se == 0.0) {
    // Pooled proportion 0 or 1: both proportions are equal.
    result.statistic = 0.0;
    result.p_value = pa < pb ? 0.0 : (pa > pb ? 1.0 : 0.5);
    return result;
  }
  result.statistic = (pa - pb) / se;
  result.p_value = NormalCdf(result.statistic);
  return result;
}

SignificanceResult ApproxRandomization(std::span<const double> a, std::span<const double> b,
                                       int iterations, std::uint64_t seed) {
  if (a.size() != b.size()) {
    throw ComputeError("approximate randomization: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + " segments");
  }
  if (a.empty()) throw ComputeError("approximate randomization: no segments");
  if (iterations < 1) throw InputError("approximate randomization: iterations must be >= 1");

  std::vector<double> diff(a.size());
  double observed = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff[i] = a[i] - b[i];
    observed += diff[i];
    magnitude += std::fabs(diff[i]);
  }
  const double tolerance = 1e-9 * (1.0 + magnitude);

  SignificanceResult result;
  result.test = SigTest::kApproxRandomization;
  result.iterations = iterations;
  result.seed = seed;
  result.statistic = observed / static_cast<double>(a.size());

  Rng rng(seed);
  long at_least = 0;
  for (int it = 0; it < iterations; ++it) {
    double shuffled = 0.0;
    for (double d : diff) shuffled += rng.Coin() ? -d : d;
    if (shuffled >= observed - tolerance) ++at_least;
  }
  result.p_value = static_cast<double>(at_least + 1) / static_cast<double>(iterations + 1);
  return result;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ComputeError("correlation undefined: length mismatch");
  if (x.size() < 3) throw ComputeError("correlation undefined: fewer than 3 points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ComputeError("correlation undefined: constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace edit_lens
