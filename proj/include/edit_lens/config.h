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

#ifndef EDIT_LENS_CONFIG_H_
#define EDIT_LENS_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "edit_lens/metrics.h"
#include "edit_lens/profiler.h"
#include "edit_lens/stats.h"
#include "edit_lens/ter.h"

namespace edit_lens {

// Every tunable of a run. Defaults reproduce the standard HTER setup;
// overrides come from the manifest "config" object, then --config, then
// command-line flags, then EDIT_LENS_SEED (seed only).
struct RunConfig {
  bool lowercase = false;
  std::vector<std::string> extra_punct;
  int max_shift_block = 10;
  int max_shift_distance = 50;
  MterDenominator mter_denominator = MterDenominator::kMeanRefLength;
  KrsConfig krs;
  int bleu_max_n = 4;
  double bleu_epsilon = 1e-9;
  std::vector<std::size_t> bin_edges{15, 25, 35};
  TtrConfig ttr;
  int bootstrap_iterations = 1000;
  int ar_iterations = 10000;
  std::uint64_t seed = kDefaultSeed;
  double alpha = 0.01;
  int shift_threshold = 10;
  int threads = 0;  // 0 = hardware concurrency

  // Standard HTER: unit shift cost, surface forms, punctuation kept.
  TerConfig Ter() const;
  // Free shifts, punctuation stripped.
  TerConfig NoShift(CompareOn compare_on) const;
  BleuConfig Bleu() const;
  int ResolvedThreads() const;
};

// Throws InputError on unknown keys or ill-typed values.
void ApplyConfigOverrides(RunConfig& config, const nlohmann::json& overrides);
nlohmann::json ConfigToJson(const RunConfig& config);

}  // namespace edit_lens

#endif  // EDIT_LENS_CONFIG_H_
