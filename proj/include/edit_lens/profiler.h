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

#ifndef EDIT_LENS_PROFILER_H_
#define EDIT_LENS_PROFILER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edit_lens/corpus.h"
#include "edit_lens/metrics.h"
#include "edit_lens/ter.h"

namespace edit_lens {

struct ErrorProfile {
  std::string system;
  double word_noshift = 0.0;   // x100
  double lemma_noshift = 0.0;  // x100
  double morph_delta_pct = 0.0;
  int shift_count = 0;
  std::size_t word_count = 0;
  double shift_pct = 0.0;
  std::optional<double> krs;  // x100; absent without alignments
};

// 100 * (lemma - word) / word. Throws ComputeError when word == 0 and the
// two differ; 0 when both are 0.
double MorphDeltaPct(double word_noshift, double lemma_noshift);
// 100 * shifts / words. Throws ComputeError when words == 0.
double ShiftPct(long shifts, long words);

// Assembles one profile from already computed runs.
ErrorProfile MakeErrorProfile(const std::string& system, const MetricScore& word_noshift,
                              const MetricScore& lemma_noshift,
                              std::span<const TerResult> hter_alignments,
                              std::size_t word_count, std::optional<double> krs);

// Shifted-token counts keyed by POS tag ("V") and by "dep:POS" ("aux:V").
// Tokens landing on a post-edit position without annotation count under
// "UNK" in both keyings.
struct ShiftClassTable {
  static constexpr const char* kUnknown = "UNK";

  std::vector<std::string> systems;
  std::map<std::string, std::map<std::string, int>> pos_rows;  // key -> system -> count
  std::map<std::string, std::map<std::string, int>> dep_rows;
  std::map<std::string, int> totals;                           // system -> shifted tokens
  std::map<std::string, int> unknown;                          // system -> UNK lookups
  std::map<std::string, bool> all_punct;  // key -> every counted token was punctuation
  bool filtered = false;

  bool IsPunctKey(const std::string& key) const;

  int Count(const std::map<std::string, std::map<std::string, int>>& rows,
            const std::string& key, const std::string& system) const;
};

// Adds one system's shifts. `alignments` must be standard HTER traces
// against the targeted post-edits in `postedits`, index for index.
void ClassifyShifts(ShiftClassTable& table, const std::string& system,
                    std::span<const TerResult> alignments, std::span<const Segment> postedits);

struct ReductionRow {
  std::string key;
  std::map<std::string, int> counts;
  std::optional<double> reduction_pct;  // nullopt = "n/a"
};

struct ReductionTable {
  std::string focal;
  std::string baseline;
  int threshold = 10;
  std::vector<ReductionRow> pos_rows;  // sorted by reduction ascending, n/a last
  std::vector<ReductionRow> dep_rows;
  ReductionRow all;
};

// 100 * (focal - baseline) / baseline; nullopt when baseline == 0 and focal
// > 0; 0 when both are 0.
std::optional<double> ReductionPct(int focal, int baseline);

// Keeps keys shifted >= threshold times by at least one system; the "all"
// row uses the unfiltered totals. Punctuation-only keys are dropped when
// `omit_punct` is set. Throws InputError when focal or baseline is unknown.
ReductionTable MakeReductionTable(const ShiftClassTable& table, const std::string& focal,
                                  const std::string& baseline, int threshold = 10,
                                  bool omit_punct = true);

struct LengthBin {
  std::size_t lo = 0;
  std::optional<std::size_t> hi;  // absent for the open last bin
  std::size_t count = 0;
  std::optional<double> mean;
  std::optional<double> pct_delta;  // vs the preceding bin when both are non-empty
};

struct BinnedScores {
  std::vector<std::size_t> edges;
  std::vector<LengthBin> bins;
};

// Percentage change oriented so that negative means quality loss for an
// error metric: -100 * (current - previous) / previous.
double BinPctDelta(double previous_mean, double current_mean);

// Bins segments by source length with edges e1 < e2 < ...: [0,e1], [e1+1,e2],
// ..., [ek+1, inf). Throws InputError on non-increasing edges.
BinnedScores BinByLength(std::span<const double> scores, std::span<const Segment> source,
                         std::span<const std::size_t> edges);

struct DocRange {
  std::string id;
  std::size_t first = 0;  // inclusive
  std::size_t last = 0;   // inclusive
};

struct TtrConfig {
  bool lowercase = true;
  bool strip_punct = true;
};

// Types / tokens. Throws ComputeError when no token remains.
double TypeTokenRatio(std::span<const Segment> segments, const TtrConfig& config = {});

struct DocRow {
  std::string doc_id;
  std::map<std::string, double> mter;  // system -> x100
  double ttr = 0.0;
  std::string competitor;
  double gain = 0.0;  // competitor mTER - focal mTER, absolute points
};

struct DocScores {
  std::string focal;
  std::vector<DocRow> rows;  // manifest order

  std::vector<double> TtrVector() const;
  std::vector<double> GainVector() const;
};

// `scores` holds one mTER MetricScore per system. Throws ComputeError with
// fewer than two systems and InputError for an unknown focal system.
DocScores DocBreakdown(std::span<const MetricScore> scores, std::span<const Segment> source,
                       std::span<const DocRange> docs, const std::string& focal,
                       const TtrConfig& ttr = {});

}  // namespace edit_lens

#endif  // EDIT_LENS_PROFILER_H_
