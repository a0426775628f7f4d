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

#include "edit_lens/ter.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "edit_lens/errors.h"
#include "edit_lens/unicode.h"

namespace edit_lens {
namespace {

using Ids = std::vector<int>;

// Cost-only Levenshtein with unit sub/ins/del costs.
int EditCost(const Ids& hyp, const Ids& ref, std::vector<int>& row) {
  const std::size_t m = ref.size();
  row.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int up = row[j];
      const int sub = diag + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[m];
}

// Edit cost plus the largest number of exact matches among the alignments
// reaching that cost.
struct CostMatches {
  int cost = 0;
  int matches = 0;
};

CostMatches EditCostMatches(const Ids& hyp, const Ids& ref, std::vector<CostMatches>& row) {
  const std::size_t m = ref.size();
  row.resize(m + 1);
  auto better = [](CostMatches a, CostMatches b) {
    return a.cost != b.cost ? a.cost < b.cost : a.matches > b.matches;
  };
  for (std::size_t j = 0; j <= m; ++j) row[j] = {static_cast<int>(j), 0};
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    CostMatches diag = row[0];
    row[0] = {static_cast<int>(i), 0};
    for (std::size_t j = 1; j <= m; ++j) {
      const CostMatches up = row[j];
      const bool same = hyp[i - 1] == ref[j - 1];
      CostMatches best{diag.cost + (same ? 0 : 1), diag.matches + (same ? 1 : 0)};
      const CostMatches del{up.cost + 1, up.matches};
      const CostMatches ins{row[j - 1].cost + 1, row[j - 1].matches};
      if (better(del, best)) best = del;
      if (better(ins, best)) best = ins;
      row[j] = best;
      diag = up;
    }
  }
  return row[m];
}

struct Alignment {
  int cost = 0;
  std::vector<EditOp> ops;  // left to right
  // hyp index -> ref index when the pair is an exact match, else -1
  std::vector<int> hyp_match;
  // hyp index -> ref index for match or substitution
  std::vector<std::optional<std::size_t>> hyp_to_ref;
  // hyp index -> number of ref tokens consumed before it on the path
  std::vector<std::size_t> ref_before;
};

// Full DP with a deterministic backtrace: diagonal first, then deletion,
// then insertion.
Alignment Align(const Ids& hyp, const Ids& ref) {
  const std::size_t n = hyp.size();
  const std::size_t m = ref.size();
  std::vector<int> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> int& { return d[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment a;
  a.cost = at(n, m);
  a.hyp_match.assign(n, -1);
  a.hyp_to_ref.assign(n, std::nullopt);
  a.ref_before.assign(n, 0);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        at(i, j) == at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1)) {
      const bool same = hyp[i - 1] == ref[j - 1];
      a.ops.push_back({same ? EditKind::kMatch : EditKind::kSubstitute, Span{i - 1, 1},
                       Span{j - 1, 1}, 0});
      if (same) a.hyp_match[i - 1] = static_cast<int>(j - 1);
      a.hyp_to_ref[i - 1] = j - 1;
      a.ref_before[i - 1] = j - 1;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      a.ops.push_back({EditKind::kDelete, Span{i - 1, 1}, std::nullopt, 0});
      a.ref_before[i - 1] = j;
      --i;
    } else {
      a.ops.push_back({EditKind::kInsert, std::nullopt, Span{j - 1, 1}, 0});
      --j;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

struct Candidate {
  int gain = std::numeric_limits<int>::min();
  int match_gain = 0;
  std::size_t start = 0;
  std::size_t len = 0;
  std::size_t dest = 0;  // block start after the move

  int Distance() const { return static_cast<int>(dest) - static_cast<int>(start); }
};

// Greater gain, then more new matches, then longer block, then shorter move,
// then leftmost start, then leftmost destination.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.match_gain != b.match_gain) return a.match_gain > b.match_gain;
  if (a.len != b.len) return a.len > b.len;
  const int da = std::abs(a.Distance());
  const int db = std::abs(b.Distance());
  if (da != db) return da < db;
  if (a.start != b.start) return a.start < b.start;
  return a.dest < b.dest;
}

void MoveBlock(const Ids& src, std::size_t start, std::size_t len, std::size_t dest, Ids& out) {
  out.assign(src.begin(), src.begin() + start);
  out.insert(out.end(), src.begin() + start + len, src.end());
  out.insert(out.begin() + dest, src.begin() + start, src.begin() + start + len);
}

std::vector<std::size_t> MatchingRefStarts(const Ids& hyp, std::size_t start, std::size_t len,
                                           const Ids& ref) {
  std::vector<std::size_t> out;
  if (len > ref.size()) return out;
  for (std::size_t j = 0; j + len <= ref.size(); ++j) {
    if (std::equal(hyp.begin() + start, hyp.begin() + start + len, ref.begin() + j)) {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<std::string> ToWords(const Ids& ids, const std::vector<std::string>& vocab) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(vocab[static_cast<std::size_t>(id)]);
  return out;
}

}  // namespace

const char* EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "sub";
    case EditKind::kInsert: return "ins";
    case EditKind::kDelete: return "del";
    case EditKind::kShift: return "shift";
  }
  return "?";
}

void TerConfig::Validate() const {
  if (shift_cost != 0 && shift_cost != 1) throw InputError("shift_cost must be 0 or 1");
  if (max_shift_block < 1) throw InputError("max_shift_block must be >= 1");
  if (max_shift_distance < 1) throw InputError("max_shift_distance must be >= 1");
}

double TerResult::Score() const { return TerScore(edits, ref_len); }

double TerScore(double edits, double ref_len) {
  if (!(ref_len > 0)) throw ComputeError("TER undefined for an empty reference");
  return edits / ref_len;
}

std::vector<std::string> NormalizeForTer(const Segment& segment, const TerConfig& config,
                                         std::vector<std::size_t>* positions) {
  std::vector<std::string> words;
  if (positions) positions->clear();
  for (std::size_t k = 0; k < segment.tokens.size(); ++k) {
    const Token& tok = segment.tokens[k];
    if (config.strip_punct && tok.is_punct) continue;
    const std::string& base = (config.compare_on == CompareOn::kLemma && tok.lemma)
                                  ? *tok.lemma
                                  : tok.surface;
    words.push_back(config.lowercase ? ToLowerUtf8(base) : base);
    if (positions) positions->push_back(k);
  }
  return words;
}

TerResult TerAlign(const Segment& hyp, const Segment& ref, const TerConfig& config) {
  std::vector<std::size_t> ref_positions;
  const std::vector<std::string> hyp_words = NormalizeForTer(hyp, config);
  const std::vector<std::string> ref_words = NormalizeForTer(ref, config, &ref_positions);
  if (ref_words.empty()) {
    throw ComputeError("segment " + std::to_string(ref.id) + ": empty reference");
  }
  TerResult result = TerAlignWords(hyp_words, ref_words, config);
  result.trace.ref_positions = std::move(ref_positions);
  return result;
}

TerResult TerAlignWords(std::span<const std::string> hyp_words,
                        std::span<const std::string> ref_words, const TerConfig& config) {
  config.Validate();
  if (ref_words.empty()) throw ComputeError("empty reference");

  std::unordered_map<std::string_view, int> index;
  std::vector<std::string> vocab;
  auto intern = [&](const std::string& w) {
    auto [it, inserted] = index.emplace(w, static_cast<int>(vocab.size()));
    if (inserted) vocab.push_back(w);
    return it->second;
  };
  Ids ref;
  Ids cur;
  for (const auto& w : ref_words) ref.push_back(intern(w));
  for (const auto& w : hyp_words) cur.push_back(intern(w));

  TerResult result;
  result.trace.hyp_words.assign(hyp_words.begin(), hyp_words.end());
  result.trace.ref_words.assign(ref_words.begin(), ref_words.end());
  for (std::size_t k = 0; k < ref.size(); ++k) result.trace.ref_positions.push_back(k);

  const std::size_t max_block = static_cast<std::size_t>(config.max_shift_block);
  const int max_distance = config.max_shift_distance;
  Alignment align = Align(cur, ref);
  std::vector<int> row;
  Ids moved;
  // With free shifts a move that keeps the cost but matches more tokens is
  // also progress; otherwise plateaus stop the search short of the
  // bag-of-words optimum.
  const bool free_shifts = config.shift_cost == 0;
  std::vector<CostMatches> cm_row;
  int cur_matches = free_shifts ? EditCostMatches(cur, ref, cm_row).matches : 0;

  while (true) {
    const std::size_t n = cur.size();
    Candidate best;
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t len = 1; len <= max_block && start + len <= n; ++len) {
        const std::vector<std::size_t> js = MatchingRefStarts(cur, start, len, ref);
        if (js.empty()) break;  // longer blocks cannot match either
        const bool misaligned = std::any_of(js.begin(), js.end(), [&](std::size_t j) {
          for (std::size_t k = 0; k < len; ++k) {
            if (align.hyp_match[start + k] != static_cast<int>(j + k)) return true;
          }
          return false;
        });
        if (!misaligned) continue;
        for (std::size_t dest = 0; dest + len <= n; ++dest) {
          const int distance = static_cast<int>(dest) - static_cast<int>(start);
          if (distance == 0 || std::abs(distance) > max_distance) continue;
          MoveBlock(cur, start, len, dest, moved);
          Candidate c;
          if (free_shifts) {
            const CostMatches cm = EditCostMatches(moved, ref, cm_row);
            c.gain = align.cost - cm.cost;
            c.match_gain = cm.matches - cur_matches;
          } else {
            c.gain = align.cost - (EditCost(moved, ref, row) + config.shift_cost);
          }
          c.start = start;
          c.len = len;
          c.dest = dest;
          const bool progress = c.gain > 0 || (c.gain == 0 && c.match_gain > 0);
          if (progress && Better(c, best)) best = c;
        }
      }
    }
    if (best.gain < 0 || (best.gain == 0 && best.match_gain <= 0)) break;
    cur_matches += best.match_gain;

    MoveBlock(cur, best.start, best.len, best.dest, moved);
    Alignment next = Align(moved, ref);

    // Landing span: the reference run the block is matched to after the
    // move, else the matching reference start nearest to where it sits.
    std::size_t landed = 0;
    bool exact = true;
    for (std::size_t k = 0; k < best.len; ++k) {
      const int r = next.hyp_match[best.dest + k];
      if (r < 0 || (k > 0 && r != next.hyp_match[best.dest] + static_cast<int>(k))) {
        exact = false;
        break;
      }
    }
    if (exact) {
      landed = static_cast<std::size_t>(next.hyp_match[best.dest]);
    } else {
      const std::size_t anchor = next.ref_before[best.dest];
      const std::vector<std::size_t> js = MatchingRefStarts(moved, best.dest, best.len, ref);
      landed = js.front();
      for (std::size_t j : js) {
        const auto dist = [&](std::size_t x) { return x > anchor ? x - anchor : anchor - x; };
        if (dist(j) < dist(landed)) landed = j;
      }
    }

    ShiftRecord rec;
    rec.op = {EditKind::kShift, Span{best.start, best.len}, Span{landed, best.len},
              best.Distance()};
    rec.before = ToWords(cur, vocab);
    rec.after = ToWords(moved, vocab);
    result.trace.ops.push_back(rec.op);
    result.trace.shifts_applied.push_back(std::move(rec));
    ++result.shifts;
    cur.swap(moved);
    align = std::move(next);
  }

  for (const EditOp& op : align.ops) {
    switch (op.kind) {
      case EditKind::kSubstitute: ++result.substitutions; break;
      case EditKind::kInsert: ++result.insertions; break;
      case EditKind::kDelete: ++result.deletions; break;
      default: break;
    }
    result.trace.ops.push_back(op);
  }
  result.trace.final_alignment = align.hyp_to_ref;
  result.edits = align.cost + config.shift_cost * result.shifts;
  result.ref_len = static_cast<int>(ref.size());
  return result;
}

int LevenshteinDistance(std::span<const std::string> a, std::span<const std::string> b) {
  std::unordered_map<std::string_view, int> index;
  auto intern = [&](const std::string& w) {
    return index.emplace(w, static_cast<int>(index.size())).first->second;
  };
  Ids x;
  Ids y;
  for (const auto& w : a) x.push_back(intern(w));
  for (const auto& w : b) y.push_back(intern(w));
  std::vector<int> row;
  return EditCost(x, y, row);
}

std::vector<ShiftBlock> ShiftBlocks(const EditTrace& trace) {
  std::vector<ShiftBlock> out;
  for (const ShiftRecord& rec : trace.shifts_applied) {
    ShiftBlock block;
    const Span hs = *rec.op.hyp_span;
    block.tokens.assign(rec.before.begin() + hs.start, rec.before.begin() + hs.start + hs.len);
    block.ref_span = *rec.op.ref_span;
    for (std::size_t k = 0; k < block.ref_span.len; ++k) {
      const std::size_t r = block.ref_span.start + k;
      block.ref_token_indices.push_back(r < trace.ref_positions.size() ? trace.ref_positions[r]
                                                                       : r);
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<std::string> ReplayTrace(const EditTrace& trace) {
  std::vector<std::string> hyp = trace.hyp_words;
  for (const EditOp& op : trace.ops) {
    if (op.kind != EditKind::kShift) continue;
    const Span hs = *op.hyp_span;
    std::vector<std::string> block(hyp.begin() + hs.start, hyp.begin() + hs.start + hs.len);
    hyp.erase(hyp.begin() + hs.start, hyp.begin() + hs.start + hs.len);
    const std::size_t dest = static_cast<std::size_t>(static_cast<long>(hs.start) + op.shift_distance);
    hyp.insert(hyp.begin() + dest, block.begin(), block.end());
  }
  std::vector<std::string> out;
  for (const EditOp& op : trace.ops) {
    switch (op.kind) {
      case EditKind::kShift:
      case EditKind::kDelete:
        break;
      case EditKind::kMatch:
        if (hyp[op.hyp_span->start] != trace.ref_words[op.ref_span->start]) return {};
        out.push_back(hyp[op.hyp_span->start]);
        break;
      case EditKind::kSubstitute:
      case EditKind::kInsert:
        out.push_back(trace.ref_words[op.ref_span->start]);
        break;
    }
  }
  return out;
}

}  // namespace edit_lens
