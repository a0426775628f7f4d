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

#include "edit_lens/config.h"

#include <thread>

#include "edit_lens/errors.h"

namespace edit_lens {
namespace {

using nlohmann::json;

template <typename T>
T Get(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InputError("config: bad value for '" + key + "': " + value.dump());
  }
}

int GetPositive(const json& value, const std::string& key) {
  const int v = Get<int>(value, key);
  if (v < 1) throw InputError("config: '" + key + "' must be >= 1");
  return v;
}

}  // namespace

TerConfig RunConfig::Ter() const {
  TerConfig c;
  c.lowercase = lowercase;
  c.max_shift_block = max_shift_block;
  c.max_shift_distance = max_shift_distance;
  return c;
}

TerConfig RunConfig::NoShift(CompareOn compare_on) const {
  TerConfig c = Ter();
  c.shift_cost = 0;
  c.strip_punct = true;
  c.compare_on = compare_on;
  return c;
}

BleuConfig RunConfig::Bleu() const { return {bleu_max_n, bleu_epsilon, lowercase}; }

int RunConfig::ResolvedThreads() const {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void ApplyConfigOverrides(RunConfig& c, const json& overrides) {
  if (overrides.is_null()) return;
  if (!overrides.is_object()) throw InputError("config: expected a JSON object");
  for (const auto& [key, v] : overrides.items()) {
    if (key == "lowercase") {
      c.lowercase = Get<bool>(v, key);
    } else if (key == "extra_punct") {
      c.extra_punct = Get<std::vector<std::string>>(v, key);
    } else if (key == "max_shift_block") {
      c.max_shift_block = GetPositive(v, key);
    } else if (key == "max_shift_distance") {
      c.max_shift_distance = GetPositive(v, key);
    } else if (key == "mter_denominator") {
      const std::string s = Get<std::string>(v, key);
      if (s == "mean") {
        c.mter_denominator = MterDenominator::kMeanRefLength;
      } else if (s == "targeted") {
        c.mter_denominator = MterDenominator::kTargetedLength;
      } else if (s == "best") {
        c.mter_denominator = MterDenominator::kBestRefLength;
      } else {
        throw InputError("config: mter_denominator must be mean, targeted or best");
      }
    } else if (key == "krs_collapse") {
      const std::string s = Get<std::string>(v, key);
      if (s == "min") {
        c.krs.collapse = KrsCollapse::kMinSource;
      } else if (s == "mean") {
        c.krs.collapse = KrsCollapse::kMeanSource;
      } else {
        throw InputError("config: krs_collapse must be min or mean");
      }
    } else if (key == "krs_brevity_penalty") {
      c.krs.brevity_penalty = Get<bool>(v, key);
    } else if (key == "bleu_max_n") {
      c.bleu_max_n = GetPositive(v, key);
    } else if (key == "bleu_epsilon") {
      c.bleu_epsilon = Get<double>(v, key);
      if (!(c.bleu_epsilon > 0)) throw InputError("config: bleu_epsilon must be > 0");
    } else if (key == "bins") {
      c.bin_edges = Get<std::vector<std::size_t>>(v, key);
      for (std::size_t k = 1; k < c.bin_edges.size(); ++k) {
        if (c.bin_edges[k] <= c.bin_edges[k - 1]) {
          throw InputError("config: bins must be strictly increasing");
        }
      }
    } else if (key == "ttr_lowercase") {
      c.ttr.lowercase = Get<bool>(v, key);
    } else if (key == "ttr_strip_punct") {
      c.ttr.strip_punct = Get<bool>(v, key);
    } else if (key == "bootstrap_iterations") {
      c.bootstrap_iterations = GetPositive(v, key);
    } else if (key == "ar_iterations") {
      c.ar_iterations = GetPositive(v, key);
    } else if (key == "seed") {
      c.seed = Get<std::uint64_t>(v, key);
    } else if (key == "alpha") {
      c.alpha = Get<double>(v, key);
      if (!(c.alpha > 0 && c.alpha < 1)) throw InputError("config: alpha must be in (0, 1)");
    } else if (key == "shift_threshold") {
      c.shift_threshold = Get<int>(v, key);
    } else if (key == "threads") {
      c.threads = Get<int>(v, key);
      if (c.threads < 0) throw InputError("config: threads must be >= 0");
    } else {
      throw InputError("config: unknown key '" + key + "'");
    }
  }
}

// `threads` is not echoed.
json ConfigToJson(const RunConfig& c) {
  return json{
      {"lowercase", c.lowercase},
      {"extra_punct", c.extra_punct},
      {"max_shift_block", c.max_shift_block},
      {"max_shift_distance", c.max_shift_distance},
      {"mter_denominator", MterDenominatorName(c.mter_denominator)},
      {"krs_collapse", c.krs.collapse == KrsCollapse::kMinSource ? "min" : "mean"},
      {"krs_brevity_penalty", c.krs.brevity_penalty},
      {"bleu_max_n", c.bleu_max_n},
      {"bleu_epsilon", c.bleu_epsilon},
      {"bins", c.bin_edges},
      {"ttr_lowercase", c.ttr.lowercase},
      {"ttr_strip_punct", c.ttr.strip_punct},
      {"bootstrap_iterations", c.bootstrap_iterations},
      {"ar_iterations", c.ar_iterations},
      {"seed", c.seed},
      {"rng", "mt19937_64"},
      {"alpha", c.alpha},
      {"shift_threshold", c.shift_threshold},
  };
}

}  // namespace edit_lens
