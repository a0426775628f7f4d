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

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "edit_lens/errors.h"
#include "edit_lens/metrics.h"
#include "edit_lens/unicode.h"

namespace edit_lens {
namespace {

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts CountNgrams(const std::vector<std::string>& words, int n) {
  NgramCounts counts;
  const std::size_t len = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + len <= words.size(); ++i) {
    ++counts[std::vector<std::string>(words.begin() + i, words.begin() + i + len)];
  }
  return counts;
}

std::vector<std::string> Words(const Segment& seg, bool lowercase) {
  std::vector<std::string> out;
  for (const Token& t : seg.tokens) out.push_back(lowercase ? ToLowerUtf8(t.surface) : t.surface);
  return out;
}

}  // namespace

BleuResult CorpusBleu(std::span<const Segment> hyps, std::span<const Segment> refs,
                      const BleuConfig& config) {
  if (hyps.empty()) throw ComputeError("BLEU: empty corpus");
  if (hyps.size() != refs.size()) {
    throw ComputeError("BLEU: " + std::to_string(hyps.size()) + " hypotheses for " +
                       std::to_string(refs.size()) + " references");
  }
  if (config.max_n < 1) throw InputError("BLEU: max_n must be >= 1");
  const std::size_t max_n = static_cast<std::size_t>(config.max_n);
  std::vector<double> matches(max_n, 0.0);
  std::vector<double> totals(max_n, 0.0);
  BleuResult result;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    const std::vector<std::string> h = Words(hyps[s], config.lowercase);
    const std::vector<std::string> r = Words(refs[s], config.lowercase);
    result.hyp_len += h.size();
    result.ref_len += r.size();
    for (std::size_t n = 1; n <= max_n; ++n) {
      const NgramCounts hc = CountNgrams(h, static_cast<int>(n));
      const NgramCounts rc = CountNgrams(r, static_cast<int>(n));
      for (const auto& [gram, count] : hc) {
        auto it = rc.find(gram);
        if (it != rc.end()) matches[n - 1] += std::min(count, it->second);
        totals[n - 1] += count;
      }
    }
  }
  if (result.hyp_len == 0) return result;  // score 0

  double log_sum = 0.0;
  for (std::size_t n = 0; n < max_n; ++n) {
    if (totals[n] == 0) {
      // Hypotheses shorter than n everywhere: the precision is unobserved.
      result.precisions.push_back(0.0);
      log_sum += std::log(config.epsilon);
      continue;
    }
    const double m = matches[n] > 0 ? matches[n] : config.epsilon;
    const double p = m / totals[n];
    result.precisions.push_back(matches[n] / totals[n]);
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(result.hyp_len);
  const double r = static_cast<double>(result.ref_len);
  result.brevity_penalty = c < r ? std::exp(1.0 - r / c) : 1.0;
  result.score = 100.0 * result.brevity_penalty * std::exp(log_sum / static_cast<double>(max_n));
  return result;
}

}  // namespace edit_lens
