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

#include "edit_lens/manifest.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "edit_lens/errors.h"

namespace edit_lens {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string Where(const fs::path& manifest) { return manifest.string() + ": "; }

void CheckKeys(const json& obj, const std::set<std::string>& allowed, const std::string& what,
               const fs::path& manifest) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError(Where(manifest) + "unknown key '" + key + "' in " + what);
    }
  }
}

std::string RequireString(const json& obj, const std::string& key, const std::string& what,
                          const fs::path& manifest) {
  if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty()) {
    throw InputError(Where(manifest) + what + ": '" + key + "' must be a non-empty string");
  }
  return obj[key].get<std::string>();
}

FileRef ParseFileRef(const json& value, const std::string& what, const fs::path& manifest) {
  const fs::path base = manifest.parent_path();
  FileRef ref;
  if (value.is_string()) {
    ref.path = base / value.get<std::string>();
    ref.format = FormatForPath(ref.path);
    return ref;
  }
  if (!value.is_object()) {
    throw InputError(Where(manifest) + what + ": expected a path or {\"path\", \"format\"}");
  }
  CheckKeys(value, {"path", "format"}, what, manifest);
  ref.path = base / RequireString(value, "path", what, manifest);
  ref.format = FormatForPath(ref.path);
  if (value.contains("format")) {
    const std::string f = value["format"].is_string() ? value["format"].get<std::string>() : "";
    if (f == "plain") {
      ref.format = SegmentFormat::kPlain;
    } else if (f == "conllu") {
      ref.format = SegmentFormat::kConllu;
    } else {
      throw InputError(Where(manifest) + what + ": format must be plain or conllu");
    }
  }
  return ref;
}

std::string Relative(const fs::path& path, const fs::path& manifest) {
  return path.lexically_relative(manifest.parent_path()).generic_string();
}

void RequireFile(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw InputError(path.string() + ": file not found");
}

std::vector<Segment> LoadSide(const FileRef& ref, std::size_t expected, const std::string& owner,
                              const std::vector<std::string>& extra_punct) {
  std::vector<Segment> segs = ParseSegmentsFile(ref.path, ref.format, extra_punct);
  if (expected != 0 && segs.size() != expected) {
    throw InputError(owner + ": " + std::to_string(segs.size()) + " segments, expected " +
                     std::to_string(expected) + " (" + ref.path.string() + ")");
  }
  return segs;
}

std::vector<AlignmentSet> LoadAlignments(const fs::path& path, const std::vector<Segment>& source,
                                         const std::vector<Segment>& target) {
  std::vector<AlignmentSet> sets = ParseAlignmentsFile(path);
  if (sets.size() != source.size()) {
    throw InputError(path.string() + ": " + std::to_string(sets.size()) +
                     " alignment lines, expected " + std::to_string(source.size()));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    try {
      ValidateAlignment(sets[i], source[i].size(), target[i].size());
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return sets;
}

void AssignDocs(std::vector<Segment>& segs, const std::vector<DocRange>& docs) {
  for (const DocRange& d : docs) {
    for (std::size_t i = d.first; i <= d.last && i < segs.size(); ++i) segs[i].doc_id = d.id;
  }
}

}  // namespace

json EvalManifest::Echo() const {
  json systems_json = json::array();
  for (const SystemEntry& s : systems) {
    json e{{"name", s.name},
           {"output", Relative(s.output.path, path)},
           {"postedit", Relative(s.postedit.path, path)}};
    if (s.align_source_output) e["align_source_output"] = Relative(*s.align_source_output, path);
    if (s.align_source_postedit) {
      e["align_source_postedit"] = Relative(*s.align_source_postedit, path);
    }
    systems_json.push_back(std::move(e));
  }
  json docs_json = json::array();
  for (const DocRange& d : docs) {
    docs_json.push_back({{"id", d.id}, {"first", d.first}, {"last", d.last}});
  }
  json extra = json::array();
  for (const FileRef& r : additional_references) extra.push_back(Relative(r.path, path));
  json out{{"manifest", path.filename().generic_string()},
           {"source", Relative(source.path, path)},
           {"systems", systems_json},
           {"additional_references", extra},
           {"docs", docs_json}};
  if (reference) out["reference"] = Relative(reference->path, path);
  return out;
}

void ValidateDocRanges(const std::vector<DocRange>& docs, std::size_t n) {
  if (docs.empty()) return;
  std::vector<const DocRange*> owner(n, nullptr);
  std::set<std::string> ids;
  for (const DocRange& d : docs) {
    if (!ids.insert(d.id).second) throw InputError("doc id '" + d.id + "' declared twice");
    if (d.first > d.last) throw InputError("doc " + d.id + ": empty range");
    if (d.last >= n) {
      throw InputError("doc " + d.id + ": segment " + std::to_string(d.last) +
                       " beyond corpus size " + std::to_string(n));
    }
    for (std::size_t i = d.first; i <= d.last; ++i) {
      if (owner[i]) {
        throw InputError("doc " + d.id + ": segment " + std::to_string(i) +
                         " claimed twice (also in doc " + owner[i]->id + ")");
      }
      owner[i] = &d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!owner[i]) throw InputError("segment " + std::to_string(i) + " is not covered by any doc");
  }
}

EvalManifest ParseManifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open manifest");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  if (!root.is_object()) throw InputError(Where(path) + "manifest must be a JSON object");
  CheckKeys(root, {"source", "reference", "systems", "additional_references", "docs", "config"},
            "manifest", path);

  EvalManifest m;
  m.path = path;
  if (!root.contains("source")) throw InputError(Where(path) + "missing 'source'");
  m.source = ParseFileRef(root["source"], "source", path);
  if (root.contains("reference")) m.reference = ParseFileRef(root["reference"], "reference", path);

  if (!root.contains("systems") || !root["systems"].is_array() || root["systems"].empty()) {
    throw InputError(Where(path) + "'systems' must be a non-empty array");
  }
  std::set<std::string> names;
  for (const json& s : root["systems"]) {
    if (!s.is_object()) throw InputError(Where(path) + "system entries must be objects");
    CheckKeys(s, {"name", "output", "postedit", "align_source_output", "align_source_postedit"},
              "system", path);
    SystemEntry e;
    e.name = RequireString(s, "name", "system", path);
    if (!names.insert(e.name).second) {
      throw InputError(Where(path) + "system " + e.name + " declared twice");
    }
    const std::string what = "system " + e.name;
    if (!s.contains("output") || !s.contains("postedit")) {
      throw InputError(Where(path) + what + ": needs 'output' and 'postedit'");
    }
    e.output = ParseFileRef(s["output"], what, path);
    e.postedit = ParseFileRef(s["postedit"], what, path);
    if (s.contains("align_source_output")) {
      e.align_source_output =
          path.parent_path() / RequireString(s, "align_source_output", what, path);
    }
    if (s.contains("align_source_postedit")) {
      e.align_source_postedit =
          path.parent_path() / RequireString(s, "align_source_postedit", what, path);
    }
    m.systems.push_back(std::move(e));
  }

  if (root.contains("additional_references")) {
    if (!root["additional_references"].is_array()) {
      throw InputError(Where(path) + "'additional_references' must be an array");
    }
    for (const json& r : root["additional_references"]) {
      m.additional_references.push_back(ParseFileRef(r, "additional reference", path));
    }
  }

  if (root.contains("docs")) {
    if (!root["docs"].is_array()) throw InputError(Where(path) + "'docs' must be an array");
    for (const json& d : root["docs"]) {
      if (!d.is_object()) throw InputError(Where(path) + "doc entries must be objects");
      CheckKeys(d, {"id", "first", "last"}, "doc", path);
      DocRange r;
      r.id = RequireString(d, "id", "doc", path);
      if (!d.contains("first") || !d["first"].is_number_unsigned() || !d.contains("last") ||
          !d["last"].is_number_unsigned()) {
        throw InputError(Where(path) + "doc " + r.id + ": 'first' and 'last' must be indices");
      }
      r.first = d["first"].get<std::size_t>();
      r.last = d["last"].get<std::size_t>();
      m.docs.push_back(std::move(r));
    }
  }
  if (root.contains("config")) m.config = root["config"];
  return m;
}

EvalRun LoadManifest(const fs::path& path, const LoadOptions& options) {
  EvalRun run;
  run.manifest = ParseManifest(path);
  const EvalManifest& m = run.manifest;
  try {
    ApplyConfigOverrides(run.config, m.config);
  } catch (const InputError& e) {
    throw InputError(Where(path) + e.what());
  }
  ApplyConfigOverrides(run.config, options.config_overrides);

  // Every referenced file must exist before anything is parsed.
  RequireFile(m.source.path);
  if (m.reference) RequireFile(m.reference->path);
  for (const FileRef& r : m.additional_references) RequireFile(r.path);
  for (const SystemEntry& s : m.systems) {
    RequireFile(s.output.path);
    RequireFile(s.postedit.path);
    if (options.require_alignments) {
      if (!s.align_source_output || !s.align_source_postedit) {
        throw InputError(Where(path) + "system " + s.name +
                         ": KRS needs align_source_output and align_source_postedit");
      }
    }
    if (s.align_source_output) RequireFile(*s.align_source_output);
    if (s.align_source_postedit) RequireFile(*s.align_source_postedit);
  }

  const std::vector<std::string>& punct = run.config.extra_punct;
  run.source = LoadSide(m.source, 0, "source", punct);
  const std::size_t n = run.source.size();
  try {
    ValidateDocRanges(m.docs, n);
  } catch (const InputError& e) {
    throw InputError(Where(path) + e.what());
  }
  AssignDocs(run.source, m.docs);
  if (m.reference) {
    run.reference = LoadSide(*m.reference, n, "reference", punct);
    AssignDocs(*run.reference, m.docs);
  }
  for (const SystemEntry& s : m.systems) {
    SystemOutput out;
    out.system_name = s.name;
    out.segments = LoadSide(s.output, n, "system " + s.name, punct);
    out.annotated = s.output.format == SegmentFormat::kConllu;
    AssignDocs(out.segments, m.docs);
    std::vector<Segment> pe = LoadSide(s.postedit, n, "post-edit of system " + s.name, punct);
    AssignDocs(pe, m.docs);
    run.refs.targeted_annotated[s.name] = s.postedit.format == SegmentFormat::kConllu;
    if (s.align_source_output && s.align_source_postedit) {
      SystemAlignments a;
      a.source_output = LoadAlignments(*s.align_source_output, run.source, out.segments);
      a.source_postedit = LoadAlignments(*s.align_source_postedit, run.source, pe);
      run.alignments.emplace(s.name, std::move(a));
    }
    run.refs.targeted.emplace(s.name, std::move(pe));
    run.systems.push_back(std::move(out));
  }
  for (std::size_t k = 0; k < m.additional_references.size(); ++k) {
    std::vector<Segment> extra = LoadSide(m.additional_references[k], n,
                                          "additional reference " + std::to_string(k), punct);
    AssignDocs(extra, m.docs);
    run.refs.additional.push_back(std::move(extra));
  }
  return run;
}

const SystemOutput& EvalRun::System(const std::string& name) const {
  for (const SystemOutput& s : systems) {
    if (s.system_name == name) return s;
  }
  throw InputError("system " + name + " is not declared in the manifest");
}

bool EvalRun::HasAlignments(const std::string& name) const { return alignments.count(name) > 0; }

bool EvalRun::HasAllAlignments() const {
  return std::all_of(systems.begin(), systems.end(),
                     [&](const SystemOutput& s) { return HasAlignments(s.system_name); });
}

}  // namespace edit_lens
