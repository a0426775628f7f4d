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

#ifndef EDIT_LENS_TER_H_
#define EDIT_LENS_TER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edit_lens/corpus.h"

namespace edit_lens {

enum class CompareOn { kSurface, kLemma };

struct TerConfig {
  int shift_cost = 1;  // 0 makes block moves free (no-shift variants)
  bool strip_punct = false;
  bool lowercase = false;
  CompareOn compare_on = CompareOn::kSurface;
  int max_shift_block = 10;
  int max_shift_distance = 50;

  // Throws InputError when a field is out of range.
  void Validate() const;
};

enum class EditKind { kMatch, kSubstitute, kInsert, kDelete, kShift };

const char* EditKindName(EditKind kind);

struct Span {
  std::size_t start = 0;
  std::size_t len = 0;

  bool operator==(const Span&) const = default;
};

// Match/substitute carry both spans (len 1), insert only a reference span,
// delete only a hypothesis span. A shift moves hyp_span of the hypothesis as
// it was just before the move; `shift_distance` is the signed offset of the
// block start; ref_span is where the block lands in the reference.
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<Span> hyp_span;
  std::optional<Span> ref_span;
  int shift_distance = 0;
};

struct ShiftRecord {
  EditOp op;
  std::vector<std::string> before;  // hypothesis just before the shift
  std::vector<std::string> after;   // hypothesis just after the shift
};

// All word positions refer to the normalized sequences (after punctuation
// stripping and lemma projection). `ref_positions[k]` maps normalized
// reference index k back to the token index in the reference Segment.
struct EditTrace {
  std::vector<EditOp> ops;  // shifts in application order, then the final alignment
  std::vector<ShiftRecord> shifts_applied;
  std::vector<std::optional<std::size_t>> final_alignment;  // shifted hyp index -> ref index
  std::vector<std::string> hyp_words;
  std::vector<std::string> ref_words;
  std::vector<std::size_t> ref_positions;
};

struct TerResult {
  EditTrace trace;
  int edits = 0;
  int ref_len = 0;
  int shifts = 0;
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;

  double Score() const;
};

// Word sequence compared by the TER engine for `segment` under `config`.
// When `positions` is non-null it receives the original token index of each
// kept word.
std::vector<std::string> NormalizeForTer(const Segment& segment, const TerConfig& config,
                                         std::vector<std::size_t>* positions = nullptr);

// Greedy tercom-style TER. Each round applies the shift with the largest
// drop in edit cost plus shift cost; when shifts are free, a move that keeps
// the cost and raises the number of matched tokens also counts. Throws
// ComputeError("segment <id>: empty reference") when the normalized
// reference is empty.
TerResult TerAlign(const Segment& hyp, const Segment& ref, const TerConfig& config);

// Same search on already-normalized word sequences.
TerResult TerAlignWords(std::span<const std::string> hyp, std::span<const std::string> ref,
                        const TerConfig& config);

// edits / ref_len, unclipped. Throws ComputeError when ref_len <= 0.
double TerScore(double edits, double ref_len);

// Unit-cost Levenshtein distance over words.
int LevenshteinDistance(std::span<const std::string> a, std::span<const std::string> b);

struct ShiftBlock {
  std::vector<std::string> tokens;
  Span ref_span;                          // normalized reference coordinates
  std::vector<std::size_t> ref_token_indices;  // token indices in the reference Segment
};

std::vector<ShiftBlock> ShiftBlocks(const EditTrace& trace);

// Replays the trace on its own hypothesis: shifts first, then the alignment
// ops. Equals trace.ref_words for every trace produced by TerAlign.
std::vector<std::string> ReplayTrace(const EditTrace& trace);

}  // namespace edit_lens

#endif  // EDIT_LENS_TER_H_
