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

#include "edit_lens/profiler.h"

#include <algorithm>
#include <set>

#include "edit_lens/errors.h"
#include "edit_lens/unicode.h"

namespace edit_lens {
namespace {

void Bump(std::map<std::string, std::map<std::string, int>>& rows, const std::string& key,
          const std::string& system) {
  ++rows[key][system];
}

std::vector<ReductionRow> ReduceRows(const ShiftClassTable& table,
                                     const std::map<std::string, std::map<std::string, int>>& rows,
                                     const std::string& focal, const std::string& baseline,
                                     int threshold, bool omit_punct) {
  std::vector<ReductionRow> out;
  for (const auto& [key, counts] : rows) {
    if (omit_punct && table.IsPunctKey(key)) continue;
    const bool keep = std::any_of(table.systems.begin(), table.systems.end(),
                                  [&](const std::string& s) {
                                    return table.Count(rows, key, s) >= threshold;
                                  });
    if (!keep) continue;
    ReductionRow row;
    row.key = key;
    for (const std::string& s : table.systems) row.counts[s] = table.Count(rows, key, s);
    row.reduction_pct = ReductionPct(row.counts[focal], row.counts[baseline]);
    out.push_back(std::move(row));
  }
  std::stable_sort(out.begin(), out.end(), [](const ReductionRow& a, const ReductionRow& b) {
    if (a.reduction_pct.has_value() != b.reduction_pct.has_value()) {
      return a.reduction_pct.has_value();
    }
    if (a.reduction_pct && *a.reduction_pct != *b.reduction_pct) {
      return *a.reduction_pct < *b.reduction_pct;
    }
    return false;
  });
  return out;
}

}  // namespace

double MorphDeltaPct(double word_noshift, double lemma_noshift) {
  if (word_noshift == 0.0) {
    if (lemma_noshift == 0.0) return 0.0;
    throw ComputeError("morphology delta undefined for a zero word-level score");
  }
  return 100.0 * (lemma_noshift - word_noshift) / word_noshift;
}

double ShiftPct(long shifts, long words) {
  if (words <= 0) throw ComputeError("shift percentage undefined without output words");
  return 100.0 * static_cast<double>(shifts) / static_cast<double>(words);
}

ErrorProfile MakeErrorProfile(const std::string& system, const MetricScore& word_noshift,
                              const MetricScore& lemma_noshift,
                              std::span<const TerResult> hter_alignments,
                              std::size_t word_count, std::optional<double> krs) {
  ErrorProfile p;
  p.system = system;
  p.word_noshift = word_noshift.corpus_value;
  p.lemma_noshift = lemma_noshift.corpus_value;
  p.morph_delta_pct = MorphDeltaPct(p.word_noshift, p.lemma_noshift);
  for (const TerResult& r : hter_alignments) p.shift_count += r.shifts;
  p.word_count = word_count;
  p.shift_pct = ShiftPct(p.shift_count, static_cast<long>(word_count));
  p.krs = krs;
  return p;
}

int ShiftClassTable::Count(const std::map<std::string, std::map<std::string, int>>& rows,
                           const std::string& key, const std::string& system) const {
  auto row = rows.find(key);
  if (row == rows.end()) return 0;
  auto cell = row->second.find(system);
  return cell == row->second.end() ? 0 : cell->second;
}

bool ShiftClassTable::IsPunctKey(const std::string& key) const {
  auto it = all_punct.find(key);
  return it != all_punct.end() && it->second;
}

void ClassifyShifts(ShiftClassTable& table, const std::string& system,
                    std::span<const TerResult> alignments, std::span<const Segment> postedits) {
  if (alignments.size() != postedits.size()) {
    throw ComputeError("shift classification: " + std::to_string(alignments.size()) +
                       " traces for " + std::to_string(postedits.size()) + " post-edits");
  }
  if (std::find(table.systems.begin(), table.systems.end(), system) == table.systems.end()) {
    table.systems.push_back(system);
  }
  table.totals[system] += 0;
  table.unknown[system] += 0;
  auto mark = [&](const std::string& key, bool punct) {
    auto [it, inserted] = table.all_punct.emplace(key, punct);
    if (!inserted) it->second = it->second && punct;
  };
  for (std::size_t i = 0; i < alignments.size(); ++i) {
    const Segment& pe = postedits[i];
    for (const ShiftBlock& block : ShiftBlocks(alignments[i].trace)) {
      for (std::size_t idx : block.ref_token_indices) {
        ++table.totals[system];
        const Token* tok = idx < pe.tokens.size() ? &pe.tokens[idx] : nullptr;
        const bool punct = tok && tok->is_punct;
        if (!tok || !tok->pos) {
          ++table.unknown[system];
          Bump(table.pos_rows, ShiftClassTable::kUnknown, system);
          Bump(table.dep_rows, ShiftClassTable::kUnknown, system);
          mark(ShiftClassTable::kUnknown, punct);
          continue;
        }
        Bump(table.pos_rows, *tok->pos, system);
        mark(*tok->pos, punct);
        const std::string dep_key =
            tok->dep_label ? *tok->dep_label + ":" + *tok->pos : ShiftClassTable::kUnknown;
        Bump(table.dep_rows, dep_key, system);
        mark(dep_key, punct);
      }
    }
  }
}

std::optional<double> ReductionPct(int focal, int baseline) {
  if (baseline == 0) {
    if (focal == 0) return 0.0;
    return std::nullopt;
  }
  return 100.0 * static_cast<double>(focal - baseline) / static_cast<double>(baseline);
}

ReductionTable MakeReductionTable(const ShiftClassTable& table, const std::string& focal,
                                  const std::string& baseline, int threshold, bool omit_punct) {
  for (const std::string* name : {&focal, &baseline}) {
    if (std::find(table.systems.begin(), table.systems.end(), *name) == table.systems.end()) {
      throw InputError("unknown system " + *name);
    }
  }
  ReductionTable out;
  out.focal = focal;
  out.baseline = baseline;
  out.threshold = threshold;
  out.pos_rows = ReduceRows(table, table.pos_rows, focal, baseline, threshold, omit_punct);
  out.dep_rows = ReduceRows(table, table.dep_rows, focal, baseline, threshold, omit_punct);
  out.all.key = "all";
  for (const std::string& s : table.systems) {
    auto it = table.totals.find(s);
    out.all.counts[s] = it == table.totals.end() ? 0 : it->second;
  }
  out.all.reduction_pct = ReductionPct(out.all.counts[focal], out.all.counts[baseline]);
  return out;
}

double BinPctDelta(double previous_mean, double current_mean) {
  return -100.0 * (current_mean - previous_mean) / previous_mean;
}

BinnedScores BinByLength(std::span<const double> scores, std::span<const Segment> source,
                         std::span<const std::size_t> edges) {
  if (scores.size() != source.size()) {
    throw ComputeError("length bins: " + std::to_string(scores.size()) + " scores for " +
                       std::to_string(source.size()) + " source segments");
  }
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k] <= edges[k - 1]) throw InputError("bin edges must be strictly increasing");
  }
  BinnedScores out;
  out.edges.assign(edges.begin(), edges.end());
  std::size_t lo = 0;
  for (std::size_t e : edges) {
    out.bins.push_back({lo, e, 0, std::nullopt, std::nullopt});
    lo = e + 1;
  }
  out.bins.push_back({lo, std::nullopt, 0, std::nullopt, std::nullopt});

  std::vector<double> sums(out.bins.size(), 0.0);
  for (std::size_t i = 0; i < source.size(); ++i) {
    const std::size_t len = source[i].size();
    const std::size_t b = static_cast<std::size_t>(
        std::lower_bound(edges.begin(), edges.end(), len) - edges.begin());
    ++out.bins[b].count;
    sums[b] += scores[i];
  }
  for (std::size_t b = 0; b < out.bins.size(); ++b) {
    LengthBin& bin = out.bins[b];
    if (bin.count) bin.mean = sums[b] / static_cast<double>(bin.count);
    if (b > 0 && bin.mean && out.bins[b - 1].mean && *out.bins[b - 1].mean != 0.0) {
      bin.pct_delta = BinPctDelta(*out.bins[b - 1].mean, *bin.mean);
    }
  }
  return out;
}

double TypeTokenRatio(std::span<const Segment> segments, const TtrConfig& config) {
  std::set<std::string> types;
  std::size_t tokens = 0;
  for (const Segment& seg : segments) {
    for (const Token& tok : seg.tokens) {
      if (config.strip_punct && tok.is_punct) continue;
      types.insert(config.lowercase ? ToLowerUtf8(tok.surface) : tok.surface);
      ++tokens;
    }
  }
  if (tokens == 0) throw ComputeError("type-token ratio undefined without tokens");
  return static_cast<double>(types.size()) / static_cast<double>(tokens);
}

std::vector<double> DocScores::TtrVector() const {
  std::vector<double> out;
  for (const DocRow& r : rows) out.push_back(r.ttr);
  return out;
}

std::vector<double> DocScores::GainVector() const {
  std::vector<double> out;
  for (const DocRow& r : rows) out.push_back(r.gain);
  return out;
}

DocScores DocBreakdown(std::span<const MetricScore> scores, std::span<const Segment> source,
                       std::span<const DocRange> docs, const std::string& focal,
                       const TtrConfig& ttr) {
  if (scores.size() < 2) throw ComputeError("doc breakdown needs at least two systems");
  const bool has_focal = std::any_of(scores.begin(), scores.end(),
                                     [&](const MetricScore& s) { return s.system == focal; });
  if (!has_focal) throw InputError("unknown focal system " + focal);
  if (docs.empty()) throw ComputeError("doc breakdown needs declared docs");
  for (const MetricScore& s : scores) {
    if (s.per_segment.size() != source.size()) {
      throw ComputeError("system " + s.system + ": per-segment scores do not match the source");
    }
  }
  DocScores out;
  out.focal = focal;
  for (const DocRange& doc : docs) {
    if (doc.first > doc.last || doc.last >= source.size()) {
      throw ComputeError("doc " + doc.id + ": range outside the corpus");
    }
    DocRow row;
    row.doc_id = doc.id;
    for (const MetricScore& s : scores) {
      double num = 0.0;
      double den = 0.0;
      for (std::size_t i = doc.first; i <= doc.last; ++i) {
        num += s.per_segment[i].numerator;
        den += s.per_segment[i].denominator;
      }
      if (!(den > 0)) throw ComputeError("doc " + doc.id + ": empty denominator");
      row.mter[s.system] = 100.0 * num / den;
    }
    row.ttr = TypeTokenRatio(source.subspan(doc.first, doc.last - doc.first + 1), ttr);
    const double focal_score = row.mter[focal];
    bool first = true;
    double best = 0.0;
    for (const MetricScore& s : scores) {
      if (s.system == focal) continue;
      const double v = row.mter[s.system];
      if (first || v < best) {
        best = v;
        row.competitor = s.system;
        first = false;
      }
    }
    row.gain = best - focal_score;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace edit_lens
