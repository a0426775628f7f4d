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

#include "edit_lens/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "edit_lens/errors.h"
#include "edit_lens/metrics.h"
#include "edit_lens/profiler.h"

namespace edit_lens {
namespace {

using nlohmann::json;

std::string Precise(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// Rounded display value; the TSV prints exactly this number.
double Display(double value, int decimals) { return std::stod(FormatFixed(value, decimals)); }

json StatsJson(const MetricScore& score) {
  json arr = json::array();
  for (const SegmentStat& s : score.per_segment) arr.push_back({s.numerator, s.denominator});
  return arr;
}

json ScoreJson(const MetricScore& score) {
  return json{{"value", Display(score.corpus_value, 1)},
              {"raw", score.corpus_value},
              {"per_segment", StatsJson(score)}};
}

json OptionalJson(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::size_t WordCount(const SystemOutput& s) {
  std::size_t n = 0;
  for (const Segment& seg : s.segments) n += seg.size();
  return n;
}

int ShiftTotal(const TerRun& run) {
  int n = 0;
  for (const TerResult& r : run.alignments) n += r.shifts;
  return n;
}

// Lazily computed per-system results shared by the commands.
class Analysis {
 public:
  explicit Analysis(const EvalRun& run) : run_(run), threads_(run.config.ResolvedThreads()) {}

  const EvalRun& run() const { return run_; }

  const TerRun& HterOf(const std::string& name) {
    auto it = hter_.find(name);
    if (it == hter_.end()) {
      it = hter_.emplace(name, Hter(run_.System(name), run_.refs, run_.config.Ter(), threads_))
               .first;
    }
    return it->second;
  }

  const MterRun& MterOf(const std::string& name) {
    auto it = mter_.find(name);
    if (it == mter_.end()) {
      it = mter_.emplace(name, Mter(run_.System(name), run_.refs, run_.config.Ter(),
                                    run_.config.mter_denominator, threads_))
               .first;
    }
    return it->second;
  }

  const TerRun& NoShiftOf(const std::string& name, CompareOn on) {
    auto& cache = on == CompareOn::kLemma ? lemma_ : word_;
    auto it = cache.find(name);
    if (it == cache.end()) {
      it = cache.emplace(name, HterNoShift(run_.System(name), run_.refs, on, run_.config.Ter(),
                                           threads_))
               .first;
    }
    return it->second;
  }

  const KrsResult& KrsOf(const std::string& name) {
    auto it = krs_.find(name);
    if (it == krs_.end()) {
      if (!run_.HasAlignments(name)) {
        throw ComputeError("system " + name + ": KRS needs source alignments");
      }
      const SystemAlignments& a = run_.alignments.at(name);
      it = krs_.emplace(name, CorpusKrs(run_.source, run_.System(name).segments,
                                        run_.refs.Targeted(name), a.source_output,
                                        a.source_postedit, run_.config.krs))
               .first;
    }
    return it->second;
  }

  void RequireLemmas(const std::string& name) {
    if (!run_.System(name).annotated) {
      throw ComputeError("system " + name + ": output has no lemma annotations");
    }
    auto it = run_.refs.targeted_annotated.find(name);
    if (it == run_.refs.targeted_annotated.end() || !it->second) {
      throw ComputeError("system " + name + ": post-edit has no lemma annotations");
    }
  }

  ErrorProfile ProfileOf(const std::string& name) {
    RequireLemmas(name);
    const TerRun& word = NoShiftOf(name, CompareOn::kSurface);
    const TerRun& lemma = NoShiftOf(name, CompareOn::kLemma);
    std::optional<double> krs;
    if (run_.HasAlignments(name)) krs = KrsOf(name).corpus_value;
    return MakeErrorProfile(name, word.score, lemma.score, HterOf(name).alignments,
                            WordCount(run_.System(name)), krs);
  }

 private:
  const EvalRun& run_;
  int threads_;
  std::map<std::string, TerRun> hter_;
  std::map<std::string, MterRun> mter_;
  std::map<std::string, TerRun> word_;
  std::map<std::string, TerRun> lemma_;
  std::map<std::string, KrsResult> krs_;
};

json Header(const EvalRun& run, const std::string& command) {
  return json{{"schema", kReportSchema},
              {"command", command},
              {"manifest", run.manifest.Echo()},
              {"config", ConfigToJson(run.config)},
              {"seed", run.config.seed}};
}

// ---- score ---------------------------------------------------------------

json OverallJson(Analysis& an, const std::vector<std::string>& metrics, std::string* tsv) {
  const EvalRun& run = an.run();
  std::ostringstream out;
  out << "system";
  for (const std::string& m : metrics) out << '\t' << m;
  out << '\n';
  json systems = json::array();
  bool mter_le_hter = true;
  for (const SystemOutput& sys : run.systems) {
    const std::string& name = sys.system_name;
    json entry{{"name", name}};
    out << name;
    for (const std::string& m : metrics) {
      double value = 0.0;
      if (m == "hter") {
        const MetricScore& s = an.HterOf(name).score;
        entry["hter"] = ScoreJson(s);
        value = s.corpus_value;
      } else if (m == "mter") {
        const MterRun& r = an.MterOf(name);
        json j = ScoreJson(r.score);
        json best = json::array();
        for (const MterSegment& seg : r.segments) best.push_back(seg.best_reference);
        j["best_reference"] = best;
        entry["mter"] = j;
        value = r.score.corpus_value;
      } else if (m == "bleu") {
        if (!run.reference) {
          throw ComputeError("BLEU needs a 'reference' file in the manifest");
        }
        const BleuResult b = CorpusBleu(sys.segments, *run.reference, run.config.Bleu());
        entry["bleu"] = {{"value", Display(b.score, 1)},
                         {"raw", b.score},
                         {"brevity_penalty", b.brevity_penalty},
                         {"precisions", b.precisions},
                         {"hyp_len", b.hyp_len},
                         {"ref_len", b.ref_len}};
        value = b.score;
      } else if (m == "krs") {
        const KrsResult& k = an.KrsOf(name);
        json per = json::array();
        for (const auto& v : k.per_segment) per.push_back(OptionalJson(v));
        entry["krs"] = {{"value", Display(k.corpus_value, 1)},
                        {"raw", k.corpus_value},
                        {"skipped", k.skipped},
                        {"per_segment", per}};
        value = k.corpus_value;
      } else {
        throw InputError("unknown metric '" + m + "' (expected hter, mter, bleu or krs)");
      }
      out << '\t' << FormatFixed(value, 1);
    }
    out << '\n';
    if (entry.contains("hter") && entry.contains("mter")) {
      const MetricScore& h = an.HterOf(name).score;
      const MetricScore& mt = an.MterOf(name).score;
      for (std::size_t i = 0; i < h.per_segment.size(); ++i) {
        if (mt.per_segment[i].numerator > h.per_segment[i].numerator) mter_le_hter = false;
      }
    }
    systems.push_back(std::move(entry));
  }
  if (tsv) *tsv = out.str();
  json result{{"systems", systems}};
  const bool both = std::find(metrics.begin(), metrics.end(), "hter") != metrics.end() &&
                    std::find(metrics.begin(), metrics.end(), "mter") != metrics.end();
  if (both) result["self_test"] = {{"mter_edits_le_hter_edits", mter_le_hter}};
  return result;
}

// ---- errors --------------------------------------------------------------

json ErrorsJson(Analysis& an, std::string* tsv) {
  const EvalRun& run = an.run();
  std::ostringstream out;
  out << "system\twords\tword_noshift\tlemma_noshift\tmorph_delta_pct\tshifts\tshift_pct\tkrs\n";
  json rows = json::array();
  bool consistent = true;
  for (const SystemOutput& sys : run.systems) {
    const std::string& name = sys.system_name;
    const ErrorProfile p = an.ProfileOf(name);
    const double delta_check = MorphDeltaPct(p.word_noshift, p.lemma_noshift);
    const double shift_check = ShiftPct(p.shift_count, static_cast<long>(p.word_count));
    consistent = consistent && delta_check == p.morph_delta_pct && shift_check == p.shift_pct;
    json shifts_per_segment = json::array();
    for (const TerResult& r : an.HterOf(name).alignments) shifts_per_segment.push_back(r.shifts);
    rows.push_back({
        {"system", name},
        {"words", p.word_count},
        {"word_noshift", {{"value", Display(p.word_noshift, 1)}, {"raw", p.word_noshift},
                          {"per_segment", StatsJson(an.NoShiftOf(name, CompareOn::kSurface).score)}}},
        {"lemma_noshift", {{"value", Display(p.lemma_noshift, 1)}, {"raw", p.lemma_noshift},
                           {"per_segment", StatsJson(an.NoShiftOf(name, CompareOn::kLemma).score)}}},
        {"morph_delta_pct", {{"value", Display(p.morph_delta_pct, 1)}, {"raw", p.morph_delta_pct}}},
        {"shifts", p.shift_count},
        {"shifts_per_segment", shifts_per_segment},
        {"shift_pct", {{"value", Display(p.shift_pct, 1)}, {"raw", p.shift_pct}}},
        {"krs", p.krs ? json{{"value", Display(*p.krs, 1)}, {"raw", *p.krs}} : json(nullptr)},
    });
    out << name << '\t' << p.word_count << '\t' << FormatFixed(p.word_noshift, 1) << '\t'
        << FormatFixed(p.lemma_noshift, 1) << '\t' << FormatFixed(p.morph_delta_pct, 1) << '\t'
        << p.shift_count << '\t' << FormatFixed(p.shift_pct, 1) << '\t'
        << (p.krs ? FormatFixed(*p.krs, 1) : std::string("n/a")) << '\n';
  }
  if (tsv) *tsv = out.str();
  return json{{"systems", rows}, {"self_test", {{"recomputed_columns_match", consistent}}}};
}

// ---- shifts --------------------------------------------------------------

json ReductionRowJson(const ReductionRow& row) {
  return json{{"class", row.key},
              {"counts", row.counts},
              {"reduction_pct", OptionalJson(row.reduction_pct)},
              {"reduction_display",
               row.reduction_pct ? json(Display(*row.reduction_pct, 0)) : json("n/a")}};
}

void ReductionRowTsv(std::ostream& out, const std::string& section, const ReductionRow& row,
                     const std::vector<std::string>& systems) {
  out << section << '\t' << row.key << '\t'
      << (row.reduction_pct ? FormatFixed(*row.reduction_pct, 0) : std::string("n/a"));
  for (const std::string& s : systems) {
    auto it = row.counts.find(s);
    out << '\t' << (it == row.counts.end() ? 0 : it->second);
  }
  out << '\n';
}

json ShiftsJson(Analysis& an, const std::string& focal, const std::string& baseline,
                int threshold, std::string* tsv, std::vector<std::string>* warnings) {
  const EvalRun& run = an.run();
  run.System(focal);
  run.System(baseline);
  ShiftClassTable table;
  json blocks = json::object();
  std::vector<std::string> names;
  for (const SystemOutput& sys : run.systems) {
    const std::string& name = sys.system_name;
    names.push_back(name);
    const TerRun& hter = an.HterOf(name);
    ClassifyShifts(table, name, hter.alignments, run.refs.Targeted(name));
    json per = json::array();
    for (std::size_t i = 0; i < hter.alignments.size(); ++i) {
      for (const ShiftBlock& b : ShiftBlocks(hter.alignments[i].trace)) {
        per.push_back({{"segment", i},
                       {"tokens", b.tokens},
                       {"ref_span", {b.ref_span.start, b.ref_span.len}},
                       {"ref_tokens", b.ref_token_indices}});
      }
    }
    blocks[name] = per;
  }
  ReductionTable red = MakeReductionTable(table, focal, baseline, threshold);

  // Missing annotations always surface, whatever the threshold.
  auto ensure_unknown = [&](std::vector<ReductionRow>& rows,
                            const std::map<std::string, std::map<std::string, int>>& src) {
    if (!src.count(ShiftClassTable::kUnknown)) return;
    for (const ReductionRow& r : rows) {
      if (r.key == ShiftClassTable::kUnknown) return;
    }
    ReductionRow row;
    row.key = ShiftClassTable::kUnknown;
    for (const std::string& s : table.systems) {
      row.counts[s] = table.Count(src, ShiftClassTable::kUnknown, s);
    }
    row.reduction_pct = ReductionPct(row.counts[focal], row.counts[baseline]);
    rows.push_back(std::move(row));
  };
  ensure_unknown(red.pos_rows, table.pos_rows);
  ensure_unknown(red.dep_rows, table.dep_rows);
  for (const auto& [name, count] : table.unknown) {
    if (count > 0 && warnings) {
      warnings->push_back("system " + name + ": " + std::to_string(count) +
                          " shifted tokens land on post-edit tokens without annotation (UNK)");
    }
  }

  std::ostringstream out;
  out << "section\tclass\treduction_pct";
  for (const std::string& s : names) out << '\t' << s;
  out << '\n';
  json pos = json::array();
  json dep = json::array();
  for (const ReductionRow& r : red.pos_rows) {
    pos.push_back(ReductionRowJson(r));
    ReductionRowTsv(out, "pos", r, names);
  }
  for (const ReductionRow& r : red.dep_rows) {
    dep.push_back(ReductionRowJson(r));
    ReductionRowTsv(out, "dep", r, names);
  }
  ReductionRowTsv(out, "all", red.all, names);
  if (tsv) *tsv = out.str();

  json unfiltered_pos = json::object();
  for (const auto& [key, counts] : table.pos_rows) unfiltered_pos[key] = counts;
  json unfiltered_dep = json::object();
  for (const auto& [key, counts] : table.dep_rows) unfiltered_dep[key] = counts;
  return json{{"focal", focal},
              {"baseline", baseline},
              {"threshold", threshold},
              {"systems", names},
              {"pos", pos},
              {"dep", dep},
              {"all", ReductionRowJson(red.all)},
              {"unknown", table.unknown},
              {"unfiltered", {{"pos", unfiltered_pos}, {"dep", unfiltered_dep}}},
              {"blocks", blocks}};
}

// ---- breakdown -----------------------------------------------------------

json BreakdownJson(Analysis& an, const std::string& focal, Emission& em) {
  const EvalRun& run = an.run();
  run.System(focal);
  if (run.manifest.docs.empty()) {
    throw ComputeError("breakdown needs docs declared in the manifest");
  }
  std::vector<MetricScore> scores;
  json bins_json = json::array();
  std::ostringstream bins_csv;
  bins_csv << "bin_lo,bin_hi,n,system,mter\n";
  for (const SystemOutput& sys : run.systems) {
    const MetricScore& s = an.MterOf(sys.system_name).score;
    scores.push_back(s);
    std::vector<double> per;
    for (const SegmentStat& st : s.per_segment) {
      per.push_back(100.0 * TerScore(st.numerator, st.denominator));
    }
    const BinnedScores binned = BinByLength(per, run.source, run.config.bin_edges);
    json sys_bins = json::array();
    for (const LengthBin& b : binned.bins) {
      sys_bins.push_back({{"lo", b.lo},
                          {"hi", b.hi ? json(*b.hi) : json(nullptr)},
                          {"n", b.count},
                          {"mter", OptionalJson(b.mean)},
                          {"pct_delta", OptionalJson(b.pct_delta)}});
      if (!b.mean) continue;
      bins_csv << b.lo << ',' << (b.hi ? std::to_string(*b.hi) : std::string("inf")) << ','
               << b.count << ',' << sys.system_name << ',' << FormatFixed(*b.mean, 4) << '\n';
    }
    bins_json.push_back({{"system", sys.system_name}, {"per_segment", per}, {"bins", sys_bins}});
  }

  DocScores docs = DocBreakdown(scores, run.source, run.manifest.docs, focal, run.config.ttr);
  std::vector<DocRow> sorted = docs.rows;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const DocRow& a, const DocRow& b) {
    return a.mter.at(focal) < b.mter.at(focal);
  });
  std::ostringstream docs_csv;
  std::ostringstream tsv;
  docs_csv << "doc_id,ttr,gain,competitor";
  tsv << "doc_id\tttr\tgain\tcompetitor";
  for (const SystemOutput& sys : run.systems) {
    docs_csv << ',' << sys.system_name;
    tsv << '\t' << sys.system_name;
  }
  docs_csv << '\n';
  tsv << '\n';
  json docs_json = json::array();
  for (const DocRow& r : sorted) {
    docs_csv << r.doc_id << ',' << FormatFixed(r.ttr, 4) << ',' << FormatFixed(r.gain, 4) << ','
             << r.competitor;
    tsv << r.doc_id << '\t' << FormatFixed(r.ttr, 4) << '\t' << FormatFixed(r.gain, 4) << '\t'
        << r.competitor;
    json mter = json::object();
    for (const SystemOutput& sys : run.systems) {
      const double v = r.mter.at(sys.system_name);
      docs_csv << ',' << FormatFixed(v, 4);
      tsv << '\t' << FormatFixed(v, 4);
      mter[sys.system_name] = v;
    }
    docs_csv << '\n';
    tsv << '\n';
    docs_json.push_back({{"doc_id", r.doc_id},
                         {"ttr", r.ttr},
                         {"gain", r.gain},
                         {"competitor", r.competitor},
                         {"mter", mter}});
  }

  json corr{{"n", docs.rows.size()}, {"x", "ttr"}, {"y", "gain"}};
  try {
    corr["r"] = Pearson(docs.TtrVector(), docs.GainVector());
  } catch (const ComputeError& e) {
    corr["r"] = nullptr;
    corr["warning"] = e.what();
    em.warnings.push_back(std::string("correlation omitted: ") + e.what());
  }
  em.csv["bins.csv"] = bins_csv.str();
  em.csv["docs.csv"] = docs_csv.str();
  em.tsv = tsv.str();
  return json{{"focal", focal},
              {"bin_edges", run.config.bin_edges},
              {"bins", bins_json},
              {"docs", docs_json},
              {"correlation", corr}};
}

// ---- significance --------------------------------------------------------

json SignificanceJson(const SignificanceResult& r, const std::string& a, const std::string& b,
                      const std::string& metric) {
  json j{{"test", SigTestName(r.test)},
         {"a", a},
         {"b", b},
         {"metric", metric},
         {"p_value", r.p_value},
         {"statistic", r.statistic},
         {"iterations", r.iterations},
         {"significant_at", OptionalJson(r.significant_at)}};
  if (r.test != SigTest::kZTest) {
    j["seed"] = r.seed;
    j["rng"] = "mt19937_64";
  }
  return j;
}

SignificanceResult RunTest(Analysis& an, SigTest test, const std::string& a, const std::string& b,
                           const std::string& metric) {
  const EvalRun& run = an.run();
  const RunConfig& cfg = run.config;
  run.System(a);
  run.System(b);
  SignificanceResult r;
  switch (test) {
    case SigTest::kBootstrap: {
      const MetricScore* sa = nullptr;
      const MetricScore* sb = nullptr;
      if (metric == "hter") {
        sa = &an.HterOf(a).score;
        sb = &an.HterOf(b).score;
      } else if (metric == "mter") {
        sa = &an.MterOf(a).score;
        sb = &an.MterOf(b).score;
      } else {
        throw InputError("bootstrap metric must be hter or mter");
      }
      r = PairedBootstrap(sa->per_segment, sb->per_segment, cfg.bootstrap_iterations, cfg.seed);
      break;
    }
    case SigTest::kZTest:
      r = ZTestProportions(ShiftTotal(an.HterOf(a)), static_cast<long>(WordCount(run.System(a))),
                           ShiftTotal(an.HterOf(b)), static_cast<long>(WordCount(run.System(b))));
      break;
    case SigTest::kApproxRandomization: {
      const KrsResult& ka = an.KrsOf(a);
      const KrsResult& kb = an.KrsOf(b);
      std::vector<double> va;
      std::vector<double> vb;
      for (std::size_t i = 0; i < ka.per_segment.size() && i < kb.per_segment.size(); ++i) {
        if (ka.per_segment[i] && kb.per_segment[i]) {
          va.push_back(*ka.per_segment[i]);
          vb.push_back(*kb.per_segment[i]);
        }
      }
      r = ApproxRandomization(va, vb, cfg.ar_iterations, cfg.seed);
      break;
    }
  }
  r.MarkLevel(cfg.alpha);
  return r;
}

std::string MetricForTest(SigTest test, const std::string& metric) {
  switch (test) {
    case SigTest::kBootstrap: return metric;
    case SigTest::kZTest: return "shift_proportion";
    case SigTest::kApproxRandomization: return "krs";
  }
  return metric;
}

}  // namespace

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string DumpJson(const json& j) { return j.dump(2) + "\n"; }

Emission ScoreCommand(const EvalRun& run, const std::vector<std::string>& metrics) {
  if (metrics.empty()) throw InputError("no metric requested");
  Analysis an(run);
  Emission em;
  em.command = "score";
  em.json = Header(run, "score");
  em.json["metrics"] = metrics;
  em.json["overall"] = OverallJson(an, metrics, &em.tsv);
  return em;
}

Emission ErrorsCommand(const EvalRun& run) {
  Analysis an(run);
  Emission em;
  em.command = "errors";
  em.json = Header(run, "errors");
  em.json["errors"] = ErrorsJson(an, &em.tsv);
  return em;
}

Emission ShiftsCommand(const EvalRun& run, const std::string& focal, const std::string& baseline,
                       int threshold) {
  Analysis an(run);
  Emission em;
  em.command = "shifts";
  em.json = Header(run, "shifts");
  em.json["shift_classes"] = ShiftsJson(an, focal, baseline, threshold, &em.tsv, &em.warnings);
  em.json["warnings"] = em.warnings;
  return em;
}

Emission BreakdownCommand(const EvalRun& run, const std::string& focal) {
  Analysis an(run);
  Emission em;
  em.command = "breakdown";
  em.json = Header(run, "breakdown");
  em.json["breakdown"] = BreakdownJson(an, focal, em);
  em.json["warnings"] = em.warnings;
  return em;
}

Emission SigtestCommand(const EvalRun& run, SigTest test, const std::string& a,
                        const std::string& b, const std::string& metric) {
  Analysis an(run);
  const SignificanceResult r = RunTest(an, test, a, b, metric);
  const std::string m = MetricForTest(test, metric);
  Emission em;
  em.command = "sigtest";
  em.json = Header(run, "sigtest");
  em.json["significance"] = SignificanceJson(r, a, b, m);
  std::ostringstream out;
  out << "test\ta\tb\tmetric\tp_value\tstatistic\titerations\tseed\n"
      << SigTestName(r.test) << '\t' << a << '\t' << b << '\t' << m << '\t'
      << Precise(r.p_value) << '\t' << Precise(r.statistic) << '\t' << r.iterations << '\t'
      << (r.test == SigTest::kZTest ? std::string("n/a") : std::to_string(r.seed)) << '\n';
  em.tsv = out.str();
  return em;
}

Emission ReportCommand(const EvalRun& run, const std::optional<std::string>& focal_arg,
                       const std::optional<std::string>& baseline_arg) {
  Analysis an(run);
  Emission em;
  em.command = "report";
  em.json = Header(run, "report");

  std::vector<std::string> metrics{"hter", "mter"};
  if (run.reference) metrics.insert(metrics.begin(), "bleu");
  if (run.HasAllAlignments()) metrics.push_back("krs");
  em.json["overall"] = OverallJson(an, metrics, &em.tsv);

  // Default focal: lowest mTER. Default baseline: the other system with the
  // fewest shifts.
  std::string focal;
  if (focal_arg) {
    focal = *focal_arg;
    run.System(focal);
  } else {
    for (const SystemOutput& s : run.systems) {
      if (focal.empty() ||
          an.MterOf(s.system_name).score.corpus_value < an.MterOf(focal).score.corpus_value) {
        focal = s.system_name;
      }
    }
  }
  std::string baseline;
  if (baseline_arg) {
    baseline = *baseline_arg;
    run.System(baseline);
  } else {
    for (const SystemOutput& s : run.systems) {
      if (s.system_name == focal) continue;
      if (baseline.empty() || ShiftTotal(an.HterOf(s.system_name)) < ShiftTotal(an.HterOf(baseline))) {
        baseline = s.system_name;
      }
    }
  }
  em.json["focal"] = focal;
  em.json["baseline"] = baseline.empty() ? json(nullptr) : json(baseline);

  bool lemmas = true;
  for (const SystemOutput& s : run.systems) {
    try {
      an.RequireLemmas(s.system_name);
    } catch (const ComputeError& e) {
      lemmas = false;
      em.warnings.push_back(std::string("error profile omitted: ") + e.what());
      break;
    }
  }
  em.json["errors"] = lemmas ? ErrorsJson(an, nullptr) : json(nullptr);
  em.json["shift_classes"] =
      baseline.empty() ? json(nullptr)
                       : ShiftsJson(an, focal, baseline, run.config.shift_threshold, nullptr,
                                    &em.warnings);
  if (!run.manifest.docs.empty() && run.systems.size() >= 2) {
    Emission scratch;
    em.json["breakdown"] = BreakdownJson(an, focal, scratch);
    em.csv = scratch.csv;
    em.warnings.insert(em.warnings.end(), scratch.warnings.begin(), scratch.warnings.end());
  } else {
    em.json["breakdown"] = nullptr;
  }

  json matrix = json::array();
  for (const SystemOutput& sa : run.systems) {
    for (const SystemOutput& sb : run.systems) {
      if (sa.system_name == sb.system_name) continue;
      const std::string& a = sa.system_name;
      const std::string& b = sb.system_name;
      for (const char* m : {"hter", "mter"}) {
        matrix.push_back(SignificanceJson(RunTest(an, SigTest::kBootstrap, a, b, m), a, b, m));
      }
      matrix.push_back(SignificanceJson(RunTest(an, SigTest::kZTest, a, b, "shift_proportion"), a,
                                        b, "shift_proportion"));
      if (run.HasAlignments(a) && run.HasAlignments(b)) {
        matrix.push_back(SignificanceJson(RunTest(an, SigTest::kApproxRandomization, a, b, "krs"),
                                          a, b, "krs"));
      }
    }
  }
  em.json["significance"] = matrix;
  em.json["warnings"] = em.warnings;
  return em;
}

void WriteEmission(const Emission& em, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw InputError((dir / name).string() + ": cannot write");
    out << text;
  };
  write(em.command + ".json", DumpJson(em.json));
  write(em.command + ".tsv", em.tsv);
  for (const auto& [name, text] : em.csv) write(name, text);
}

}  // namespace edit_lens
