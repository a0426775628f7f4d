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

// edit-lens: post-edit based MT error analysis.
//
//   edit-lens score     MANIFEST [--metric hter,mter,bleu,krs]
//   edit-lens errors    MANIFEST
//   edit-lens shifts    MANIFEST --focal S --baseline T [--threshold 10]
//   edit-lens breakdown MANIFEST --focal S [--bins 15,25,35]
//   edit-lens sigtest   MANIFEST --test bootstrap|ztest|ar --a S --b T [--seed N]
//   edit-lens report    MANIFEST [--focal S] [--baseline T]
//
// Exit codes: 0 success, 2 input error, 3 computation precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edit_lens/errors.h"
#include "edit_lens/manifest.h"
#include "edit_lens/report.h"

namespace {

using edit_lens::ComputeError;
using edit_lens::InputError;

struct CommonOptions {
  std::string manifest;
  std::string config_file;
  std::string out_dir;
  bool lowercase = false;
  bool tsv = false;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("manifest", o.manifest, "Evaluation manifest (JSON)")->required();
  cmd->add_option("--config", o.config_file, "JSON file overriding configuration defaults");
  cmd->add_option("--out", o.out_dir, "Directory for <command>.json/.tsv and CSV files");
  cmd->add_flag("--lowercase", o.lowercase, "Case-insensitive scoring");
  cmd->add_flag("--tsv", o.tsv, "Print the TSV table instead of JSON when --out is not given");
  cmd->add_option("--threads", o.threads, "Worker threads for per-segment scoring (0 = all cores)");
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

nlohmann::json ReadConfigFile(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open config file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

edit_lens::EvalRun Load(const CommonOptions& o, bool need_alignments) {
  edit_lens::LoadOptions options;
  options.require_alignments = need_alignments;
  options.config_overrides = ReadConfigFile(o.config_file);
  edit_lens::EvalRun run = edit_lens::LoadManifest(o.manifest, options);
  if (o.lowercase) run.config.lowercase = true;
  if (o.threads) {
    if (*o.threads < 0) throw InputError("--threads must be >= 0");
    run.config.threads = *o.threads;
  }
  if (const char* env = std::getenv("EDIT_LENS_SEED")) {
    try {
      std::size_t used = 0;
      run.config.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InputError(std::string("EDIT_LENS_SEED: not an unsigned integer: ") + env);
    }
  }
  if (o.seed) run.config.seed = *o.seed;
  return run;
}

void Emit(const edit_lens::Emission& em, const CommonOptions& o) {
  for (const std::string& w : em.warnings) std::cerr << "warning: " << w << '\n';
  if (!o.out_dir.empty()) {
    edit_lens::WriteEmission(em, o.out_dir);
    std::cout << em.tsv;
  } else if (o.tsv) {
    std::cout << em.tsv;
  } else {
    std::cout << edit_lens::DumpJson(em.json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-edit based machine translation error analysis"};
  app.require_subcommand(1);

  CommonOptions common;

  CLI::App* score = app.add_subcommand("score", "Corpus HTER, mTER, BLEU and KRS per system");
  AddCommon(score, common);
  std::string metrics = "hter,mter";
  score->add_option("--metric", metrics, "Comma-separated: hter, mter, bleu, krs");

  CLI::App* errors = app.add_subcommand("errors", "Morphology, lexical and word-order profile");
  AddCommon(errors, common);

  CLI::App* shifts = app.add_subcommand("shifts", "Shifted words by POS and dependency label");
  AddCommon(shifts, common);
  std::string focal;
  std::string baseline;
  std::optional<int> threshold;
  shifts->add_option("--focal", focal, "System whose reduction is reported")->required();
  shifts->add_option("--baseline", baseline, "Reference system for the reduction")->required();
  shifts->add_option("--threshold", threshold, "Minimum shift count in at least one system");

  CLI::App* breakdown = app.add_subcommand("breakdown", "mTER by length bin and by document");
  AddCommon(breakdown, common);
  std::string bins;
  breakdown->add_option("--focal", focal, "System whose per-doc gain is correlated")->required();
  breakdown->add_option("--bins", bins, "Bin edges, e.g. 15,25,35");

  CLI::App* sigtest = app.add_subcommand("sigtest", "Significance test between two systems");
  AddCommon(sigtest, common);
  std::string test = "bootstrap";
  std::string sys_a;
  std::string sys_b;
  std::string test_metric = "hter";
  std::optional<int> iterations;
  sigtest->add_option("--test", test, "bootstrap | ztest | ar")
      ->check(CLI::IsMember({"bootstrap", "ztest", "ar"}));
  sigtest->add_option("--a", sys_a, "System A (hypothesis: A is better)")->required();
  sigtest->add_option("--b", sys_b, "System B")->required();
  sigtest->add_option("--metric", test_metric, "Bootstrap metric: hter | mter")
      ->check(CLI::IsMember({"hter", "mter"}));
  sigtest->add_option("--seed", common.seed, "RNG seed (overrides EDIT_LENS_SEED)");
  sigtest->add_option("--iterations", iterations, "Resampling iterations");

  CLI::App* report = app.add_subcommand("report", "Every table and figure in one JSON report");
  AddCommon(report, common);
  std::optional<std::string> report_focal;
  std::optional<std::string> report_baseline;
  report->add_option("--focal", report_focal, "Focal system (default: lowest mTER)");
  report->add_option("--baseline", report_baseline,
                     "Baseline for shift reductions (default: fewest shifts)");
  report->add_option("--seed", common.seed, "RNG seed (overrides EDIT_LENS_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (score->parsed()) {
      const std::vector<std::string> list = SplitCommas(metrics);
      const bool krs = std::find(list.begin(), list.end(), "krs") != list.end();
      const edit_lens::EvalRun run = Load(common, krs);
      Emit(edit_lens::ScoreCommand(run, list), common);
    } else if (errors->parsed()) {
      Emit(edit_lens::ErrorsCommand(Load(common, false)), common);
    } else if (shifts->parsed()) {
      edit_lens::EvalRun run = Load(common, false);
      const int t = threshold.value_or(run.config.shift_threshold);
      Emit(edit_lens::ShiftsCommand(run, focal, baseline, t), common);
    } else if (breakdown->parsed()) {
      edit_lens::EvalRun run = Load(common, false);
      if (!bins.empty()) {
        std::vector<std::size_t> edges;
        for (const std::string& e : SplitCommas(bins)) {
          try {
            edges.push_back(std::stoul(e));
          } catch (const std::exception&) {
            throw InputError("--bins: not an integer: " + e);
          }
        }
        edit_lens::ApplyConfigOverrides(run.config, {{"bins", edges}});
      }
      Emit(edit_lens::BreakdownCommand(run, focal), common);
    } else if (sigtest->parsed()) {
      const edit_lens::SigTest kind = test == "bootstrap" ? edit_lens::SigTest::kBootstrap
                                      : test == "ztest"   ? edit_lens::SigTest::kZTest
                                                          : edit_lens::SigTest::kApproxRandomization;
      edit_lens::EvalRun run = Load(common, kind == edit_lens::SigTest::kApproxRandomization);
      if (iterations) {
        const char* key = kind == edit_lens::SigTest::kBootstrap ? "bootstrap_iterations"
                                                                  : "ar_iterations";
        edit_lens::ApplyConfigOverrides(run.config, {{key, *iterations}});
      }
      Emit(edit_lens::SigtestCommand(run, kind, sys_a, sys_b, test_metric), common);
    } else if (report->parsed()) {
      Emit(edit_lens::ReportCommand(Load(common, false), report_focal, report_baseline), common);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
