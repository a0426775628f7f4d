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

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "edit_lens/errors.h"
#include "edit_lens/metrics.h"

namespace edit_lens {
namespace {

// (order key, position) pairs; a pair of entries is discordant when the
// keys and the positions are strictly ordered in opposite directions.
double SimilarityOfPairs(const std::vector<std::pair<double, double>>& entries) {
  const std::size_t k = entries.size();
  if (k <= 1) return 1.0;
  std::size_t discordant = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& [xi, yi] = entries[i];
      const auto& [xj, yj] = entries[j];
      if ((xi < xj && yi > yj) || (xi > xj && yi < yj)) ++discordant;
    }
  }
  const double dmax = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
  return 1.0 - std::sqrt(static_cast<double>(discordant) / dmax);
}

double Collapse(const std::vector<std::size_t>& positions, KrsCollapse collapse) {
  if (collapse == KrsCollapse::kMinSource) {
    return static_cast<double>(*std::min_element(positions.begin(), positions.end()));
  }
  double sum = 0.0;
  for (std::size_t p : positions) sum += static_cast<double>(p);
  return sum / static_cast<double>(positions.size());
}

// source position -> aligned target positions
std::map<std::size_t, std::vector<std::size_t>> BySource(const AlignmentSet& alignment) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (const AlignmentLink& l : alignment.links) out[l.source].push_back(l.target);
  return out;
}

}  // namespace

double KendallSimilarity(std::span<const double> positions) {
  std::vector<std::pair<double, double>> entries;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    entries.emplace_back(static_cast<double>(i), positions[i]);
  }
  return SimilarityOfPairs(entries);
}

double KrsBrevity(std::size_t reference_count, std::size_t mapped) {
  if (mapped == 0) return 0.0;
  return std::min(1.0, std::exp(1.0 - static_cast<double>(reference_count) /
                                          static_cast<double>(mapped)));
}

std::optional<double> Krs(const Segment& source, const Segment& target,
                          const AlignmentSet& alignment, const KrsConfig& config) {
  ValidateAlignment(alignment, source.size(), target.size());
  if (alignment.empty()) return std::nullopt;
  std::map<std::size_t, std::vector<std::size_t>> by_target;
  for (const AlignmentLink& l : alignment.links) by_target[l.target].push_back(l.source);
  std::vector<double> sequence;
  for (const auto& [t, sources] : by_target) sequence.push_back(Collapse(sources, config.collapse));
  const double bp = config.brevity_penalty ? KrsBrevity(target.size(), sequence.size()) : 1.0;
  return bp * KendallSimilarity(sequence);
}

std::optional<double> KrsPair(const Segment& source, const Segment& mt, const Segment& pe,
                              const AlignmentSet& source_mt, const AlignmentSet& source_pe,
                              const KrsConfig& config) {
  ValidateAlignment(source_mt, source.size(), mt.size());
  ValidateAlignment(source_pe, source.size(), pe.size());
  if (source_mt.empty() || source_pe.empty()) return std::nullopt;
  const auto mt_of = BySource(source_mt);
  const auto pe_of = BySource(source_pe);
  // (post-edit position, source position, MT position)
  std::vector<std::tuple<double, std::size_t, double>> shared;
  for (const auto& [s, pe_positions] : pe_of) {
    auto it = mt_of.find(s);
    if (it == mt_of.end()) continue;
    shared.emplace_back(Collapse(pe_positions, config.collapse), s,
                        Collapse(it->second, config.collapse));
  }
  std::sort(shared.begin(), shared.end());
  std::vector<std::pair<double, double>> entries;
  for (const auto& [pe_pos, s, mt_pos] : shared) entries.emplace_back(pe_pos, mt_pos);
  const double bp = config.brevity_penalty ? KrsBrevity(pe_of.size(), entries.size())
                                           : (entries.empty() ? 0.0 : 1.0);
  return bp * SimilarityOfPairs(entries);
}

KrsResult CorpusKrs(std::span<const Segment> source, std::span<const Segment> mt,
                    std::span<const Segment> pe, std::span<const AlignmentSet> source_mt,
                    std::span<const AlignmentSet> source_pe, const KrsConfig& config) {
  const std::size_t n = source.size();
  if (mt.size() != n || pe.size() != n || source_mt.size() != n || source_pe.size() != n) {
    throw ComputeError("KRS: source, outputs, post-edits and alignments differ in length");
  }
  KrsResult result;
  double sum = 0.0;
  std::size_t scored = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<double> v = KrsPair(source[i], mt[i], pe[i], source_mt[i], source_pe[i], config);
    if (v) {
      sum += *v;
      ++scored;
    } else {
      ++result.skipped;
    }
    result.per_segment.push_back(v);
  }
  if (scored == 0) throw ComputeError("KRS: no segment has usable alignments");
  result.corpus_value = 100.0 * sum / static_cast<double>(scored);
  return result;
}

}  // namespace edit_lens
