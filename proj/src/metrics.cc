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

#include "edit_lens/metrics.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "edit_lens/errors.h"
#include "edit_lens/parallel.h"

namespace edit_lens {
namespace {

void CheckSizes(const SystemOutput& system, const std::vector<Segment>& refs) {
  if (system.segments.size() != refs.size()) {
    throw InputError("system " + system.system_name + ": " +
                     std::to_string(system.segments.size()) + " segments, expected " +
                     std::to_string(refs.size()));
  }
}

TerResult AlignOrThrow(const SystemOutput& system, const Segment& hyp, const Segment& ref,
                       const TerConfig& config) {
  try {
    return TerAlign(hyp, ref, config);
  } catch (const ComputeError& e) {
    throw ComputeError("system " + system.system_name + ": " + e.what());
  }
}

TerRun RunTargeted(const std::string& name, const SystemOutput& system, const ReferenceSet& refs,
                   const TerConfig& config, int threads) {
  const std::vector<Segment>& targeted = refs.Targeted(system.system_name);
  CheckSizes(system, targeted);
  TerRun run;
  run.alignments.resize(targeted.size());
  ParallelFor(targeted.size(), threads, [&](std::size_t i) {
    run.alignments[i] = AlignOrThrow(system, system.segments[i], targeted[i], config);
  });
  run.score.name = name;
  run.score.system = system.system_name;
  for (const TerResult& r : run.alignments) {
    run.score.per_segment.push_back({static_cast<double>(r.edits),
                                     static_cast<double>(r.ref_len)});
  }
  run.score.corpus_value = run.score.RecomputeCorpusValue();
  return run;
}

}  // namespace

double MetricScore::RecomputeCorpusValue() const {
  double num = 0.0;
  double den = 0.0;
  for (const SegmentStat& s : per_segment) {
    num += s.numerator;
    den += s.denominator;
  }
  if (!(den > 0)) throw ComputeError(name + ": empty denominator");
  return 100.0 * num / den;
}

TerRun Hter(const SystemOutput& system, const ReferenceSet& refs, const TerConfig& config,
            int threads) {
  return RunTargeted("hter", system, refs, config, threads);
}

const char* MterDenominatorName(MterDenominator d) {
  switch (d) {
    case MterDenominator::kMeanRefLength: return "mean";
    case MterDenominator::kTargetedLength: return "targeted";
    case MterDenominator::kBestRefLength: return "best";
  }
  return "?";
}

MterRun Mter(const SystemOutput& system, const ReferenceSet& refs, const TerConfig& config,
             MterDenominator denominator, int threads) {
  const std::vector<Segment>& targeted = refs.Targeted(system.system_name);
  CheckSizes(system, targeted);
  MterRun run;
  run.segments.resize(targeted.size());
  ParallelFor(targeted.size(), threads, [&](std::size_t i) {
    const std::vector<const Segment*> all = refs.AllFor(i);
    if (all.empty()) {
      throw ComputeError("segment " + std::to_string(i) + ": no references");
    }
    MterSegment seg;
    double total_len = 0.0;
    int best_len = 0;
    for (std::size_t r = 0; r < all.size(); ++r) {
      const TerResult res = AlignOrThrow(system, system.segments[i], *all[r], config);
      total_len += res.ref_len;
      if (r == 0 || res.edits < seg.min_edits) {
        seg.min_edits = res.edits;
        seg.best_reference = r;
        best_len = res.ref_len;
      }
    }
    switch (denominator) {
      case MterDenominator::kMeanRefLength:
        seg.denominator = total_len / static_cast<double>(all.size());
        break;
      case MterDenominator::kTargetedLength:
        seg.denominator = static_cast<double>(NormalizeForTer(targeted[i], config).size());
        break;
      case MterDenominator::kBestRefLength:
        seg.denominator = best_len;
        break;
    }
    run.segments[i] = seg;
  });
  run.score.name = "mter";
  run.score.system = system.system_name;
  for (const MterSegment& s : run.segments) {
    run.score.per_segment.push_back({static_cast<double>(s.min_edits), s.denominator});
  }
  run.score.corpus_value = run.score.RecomputeCorpusValue();
  return run;
}

TerRun HterNoShift(const SystemOutput& system, const ReferenceSet& refs, CompareOn compare_on,
                   const TerConfig& base, int threads) {
  TerConfig config = base;
  config.shift_cost = 0;
  config.strip_punct = true;
  config.compare_on = compare_on;
  return RunTargeted(compare_on == CompareOn::kLemma ? "hter_noshift_lemma"
                                                     : "hter_noshift_word",
                     system, refs, config, threads);
}

int PerEdits(std::span<const std::string> hyp, std::span<const std::string> ref) {
  std::map<std::string_view, int> counts;
  for (const auto& w : ref) ++counts[w];
  int common = 0;
  for (const auto& w : hyp) {
    auto it = counts.find(w);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  return static_cast<int>(std::max(hyp.size(), ref.size())) - common;
}

double Per(const Segment& hyp, const Segment& ref) {
  if (ref.empty()) throw ComputeError("PER undefined for an empty reference");
  std::vector<std::string> h;
  std::vector<std::string> r;
  for (const Token& t : hyp.tokens) h.push_back(t.surface);
  for (const Token& t : ref.tokens) r.push_back(t.surface);
  return static_cast<double>(PerEdits(h, r)) / static_cast<double>(r.size());
}

}  // namespace edit_lens
