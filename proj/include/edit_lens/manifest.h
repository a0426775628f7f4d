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

#ifndef EDIT_LENS_MANIFEST_H_
#define EDIT_LENS_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edit_lens/config.h"
#include "edit_lens/corpus.h"
#include "edit_lens/profiler.h"

namespace edit_lens {

struct FileRef {
  std::filesystem::path path;  // resolved against the manifest directory
  SegmentFormat format = SegmentFormat::kPlain;
};

struct SystemEntry {
  std::string name;
  FileRef output;
  FileRef postedit;
  std::optional<std::filesystem::path> align_source_output;
  std::optional<std::filesystem::path> align_source_postedit;
};

struct EvalManifest {
  std::filesystem::path path;
  FileRef source;
  std::optional<FileRef> reference;
  std::vector<SystemEntry> systems;
  std::vector<FileRef> additional_references;
  std::vector<DocRange> docs;
  nlohmann::json config = nlohmann::json::object();

  nlohmann::json Echo() const;
};

struct SystemAlignments {
  std::vector<AlignmentSet> source_output;
  std::vector<AlignmentSet> source_postedit;
};

// A fully loaded and cross-validated evaluation run. Immutable after load.
struct EvalRun {
  EvalManifest manifest;
  RunConfig config;
  std::vector<Segment> source;
  std::optional<std::vector<Segment>> reference;
  std::vector<SystemOutput> systems;
  ReferenceSet refs;
  std::map<std::string, SystemAlignments> alignments;

  std::size_t size() const { return source.size(); }
  // Throws InputError naming the system when it is not declared.
  const SystemOutput& System(const std::string& name) const;
  bool HasAlignments(const std::string& name) const;
  bool HasAllAlignments() const;
};

struct LoadOptions {
  bool require_alignments = false;
  // Applied on top of the manifest "config" object.
  nlohmann::json config_overrides = nlohmann::json::object();
};

// Parses the manifest file only. Throws InputError.
EvalManifest ParseManifest(const std::filesystem::path& path);

// Parses, loads every referenced file and validates segment counts, doc
// ranges and alignment bounds. Throws InputError with file:line context.
EvalRun LoadManifest(const std::filesystem::path& path, const LoadOptions& options = {});

// Checks that inclusive ranges cover [0, n) exactly once and are non-empty.
void ValidateDocRanges(const std::vector<DocRange>& docs, std::size_t n);

}  // namespace edit_lens

#endif  // EDIT_LENS_MANIFEST_H_
