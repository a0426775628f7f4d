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

#ifndef EDIT_LENS_REPORT_H_
#define EDIT_LENS_REPORT_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edit_lens/manifest.h"
#include "edit_lens/stats.h"

namespace edit_lens {

inline constexpr int kReportSchema = 1;

// Output of one command: a JSON document, a TSV table with a header row and
// optional CSV side files (figure data) keyed by file name.
struct Emission {
  std::string command;
  nlohmann::json json;
  std::string tsv;
  std::map<std::string, std::string> csv;
  std::vector<std::string> warnings;
};

// Presentation rounding used by every table: "%.<decimals>f".
std::string FormatFixed(double value, int decimals);

// metrics: any of hter, mter, bleu, krs. BLEU needs a manifest reference and
// KRS needs alignments (ComputeError otherwise).
Emission ScoreCommand(const EvalRun& run, const std::vector<std::string>& metrics);

// Word/lemma no-shift HTER, morphology delta, shifts and KRS per system.
// Throws ComputeError naming the first system without lemma annotations.
Emission ErrorsCommand(const EvalRun& run);

// Shift classification by POS and dep:POS with the focal-vs-baseline
// reduction column. Throws InputError for unknown systems.
Emission ShiftsCommand(const EvalRun& run, const std::string& focal,
                       const std::string& baseline, int threshold);

// Length bins (bins.csv) and per-doc scores (docs.csv) with the TTR/gain
// Pearson correlation when at least 3 docs give a defined value.
Emission BreakdownCommand(const EvalRun& run, const std::string& focal);

// metric selects the per-segment data for the bootstrap: hter or mter.
// The z-test compares shift proportions and the randomization test compares
// per-segment KRS.
Emission SigtestCommand(const EvalRun& run, SigTest test, const std::string& a,
                        const std::string& b, const std::string& metric);

// Everything at once: overall scores, error profiles, shift classes, bins,
// docs with correlation and the pairwise significance matrix.
Emission ReportCommand(const EvalRun& run, const std::optional<std::string>& focal,
                       const std::optional<std::string>& baseline);

// Writes <dir>/<command>.json, <dir>/<command>.tsv and every CSV file.
void WriteEmission(const Emission& emission, const std::filesystem::path& dir);

// Canonical JSON text (2-space indent, trailing newline).
std::string DumpJson(const nlohmann::json& json);

}  // namespace edit_lens

#endif  // EDIT_LENS_REPORT_H_
