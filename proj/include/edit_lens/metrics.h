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

#ifndef EDIT_LENS_METRICS_H_
#define EDIT_LENS_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edit_lens/corpus.h"
#include "edit_lens/ter.h"

namespace edit_lens {

// One segment's contribution to a ratio metric.
struct SegmentStat {
  double numerator = 0.0;
  double denominator = 0.0;
};

// corpus_value is 100 * sum(numerator) / sum(denominator) for ratio metrics.
struct MetricScore {
  std::string name;
  std::string system;
  double corpus_value = 0.0;
  std::vector<SegmentStat> per_segment;

  double RecomputeCorpusValue() const;
};

// Per-segment edits and reference lengths, plus the traces when needed.
struct TerRun {
  MetricScore score;
  std::vector<TerResult> alignments;
};

TerRun Hter(const SystemOutput& system, const ReferenceSet& refs, const TerConfig& config,
            int threads = 1);

enum class MterDenominator { kMeanRefLength, kTargetedLength, kBestRefLength };

const char* MterDenominatorName(MterDenominator d);

struct MterSegment {
  int min_edits = 0;
  std::size_t best_reference = 0;  // index into ReferenceSet::AllFor
  double denominator = 0.0;
};

struct MterRun {
  MetricScore score;
  std::vector<MterSegment> segments;
};

MterRun Mter(const SystemOutput& system, const ReferenceSet& refs, const TerConfig& config,
             MterDenominator denominator = MterDenominator::kMeanRefLength, int threads = 1);

// TER with free shifts and punctuation stripped, against the targeted
// post-edit, on surface forms or lemmas. `base` supplies lowercase and caps.
TerRun HterNoShift(const SystemOutput& system, const ReferenceSet& refs, CompareOn compare_on,
                   const TerConfig& base = {}, int threads = 1);

struct BleuConfig {
  int max_n = 4;
  double epsilon = 1e-9;  // replaces a zero n-gram match count
  bool lowercase = false;
};

struct BleuResult {
  double score = 0.0;  // x100
  double brevity_penalty = 1.0;
  std::vector<double> precisions;
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
};

// Corpus BLEU against a single reference per segment. Throws ComputeError on
// an empty corpus or mismatched sizes.
BleuResult CorpusBleu(std::span<const Segment> hyps, std::span<const Segment> refs,
                      const BleuConfig& config = {});

// Position-independent error: max(|hyp|,|ref|) - |multiset intersection|.
int PerEdits(std::span<const std::string> hyp, std::span<const std::string> ref);
// PerEdits / |ref|; throws ComputeError on an empty reference.
double Per(const Segment& hyp, const Segment& ref);

enum class KrsCollapse { kMinSource, kMeanSource };

struct KrsConfig {
  KrsCollapse collapse = KrsCollapse::kMinSource;
  bool brevity_penalty = true;
};

// 1 - sqrt(d / dmax) over a sequence of positions (strict inversions count
// as discordant, ties do not). Sequences of length <= 1 score 1.0.
double KendallSimilarity(std::span<const double> positions);

// Brevity factor min(1, exp(1 - reference_count / mapped)); 0 when nothing
// is mapped.
double KrsBrevity(std::size_t reference_count, std::size_t mapped);

// Reordering score of `target` relative to `source`; nullopt (skipped) when
// the alignment is empty.
std::optional<double> Krs(const Segment& source, const Segment& target,
                          const AlignmentSet& alignment, const KrsConfig& config = {});

// Compares the source-relative order of an MT output with that of its
// post-edit: source positions aligned on both sides are ordered by post-edit
// position, and the MT positions read in that order are scored. Brevity uses
// the number of source positions covered by the post-edit alignment.
std::optional<double> KrsPair(const Segment& source, const Segment& mt, const Segment& pe,
                              const AlignmentSet& source_mt, const AlignmentSet& source_pe,
                              const KrsConfig& config = {});

struct KrsResult {
  std::vector<std::optional<double>> per_segment;
  double corpus_value = 0.0;  // x100, unweighted mean over scored segments
  std::size_t skipped = 0;
};

KrsResult CorpusKrs(std::span<const Segment> source, std::span<const Segment> mt,
                    std::span<const Segment> pe, std::span<const AlignmentSet> source_mt,
                    std::span<const AlignmentSet> source_pe, const KrsConfig& config = {});

}  // namespace edit_lens

#endif  // EDIT_LENS_METRICS_H_
