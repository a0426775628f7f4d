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

#ifndef EDIT_LENS_CORPUS_H_
#define EDIT_LENS_CORPUS_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edit_lens {

struct Token {
  std::string surface;
  std::optional<std::string> lemma;
  std::optional<std::string> pos;
  std::optional<std::string> dep_label;
  bool is_punct = false;
};

// Builds a token from a pre-tokenized surface form; is_punct is derived from
// the surface and the extra punctuation list.
Token MakeToken(std::string surface, const std::vector<std::string>& extra_punct);

bool IsPunct(const Token& token, const std::vector<std::string>& extra_punct);

struct Segment {
  std::size_t id = 0;
  std::string doc_id;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Convenience for tests and small tools: whitespace-split `text` into a
// plain (unannotated) segment.
Segment SegmentFromText(const std::string& text, std::size_t id = 0,
                        const std::vector<std::string>& extra_punct = {});

enum class SegmentFormat { kPlain, kConllu };

// .conll / .conllu select the annotated format; everything else is plain.
SegmentFormat FormatForPath(const std::filesystem::path& path);

// Plain: one segment per line, tokens separated by whitespace.
// Conllu: blank-line separated blocks of tab-separated lines with at least
// the columns ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL. Only FORM, LEMMA,
// UPOS and DEPREL are read; "_" means absent. Lines starting with '#' are
// comments. Errors are InputError("<name>:<line>: ...").
std::vector<Segment> ParseSegments(std::istream& in, SegmentFormat format,
                                   const std::vector<std::string>& extra_punct,
                                   const std::string& source_name = "<input>");
std::vector<Segment> ParseSegmentsFile(const std::filesystem::path& path,
                                       SegmentFormat format,
                                       const std::vector<std::string>& extra_punct);

// Inverse of the plain parser.
std::string ToPlainText(const std::vector<Segment>& segments);

struct AlignmentLink {
  std::size_t source = 0;
  std::size_t target = 0;

  auto operator<=>(const AlignmentLink&) const = default;
};

// Links are kept sorted by (source, target) with duplicates removed.
struct AlignmentSet {
  std::vector<AlignmentLink> links;

  bool empty() const { return links.empty(); }
  void Add(std::size_t source, std::size_t target);
};

// Pharaoh format: "i-j" pairs, 0-based, one line per segment.
std::vector<AlignmentSet> ParseAlignments(std::istream& in,
                                          const std::string& source_name = "<input>");
std::vector<AlignmentSet> ParseAlignmentsFile(const std::filesystem::path& path);

// Throws InputError if any link falls outside the segment bounds.
void ValidateAlignment(const AlignmentSet& alignment, std::size_t source_len,
                       std::size_t target_len);

struct SystemOutput {
  std::string system_name;
  std::vector<Segment> segments;
  bool annotated = false;
};

// Targeted post-edits keyed by system, plus extra reference files that are
// not tied to a system. The "available post-edits" for a segment are the
// targeted post-edits of every system followed by every additional reference.
struct ReferenceSet {
  std::map<std::string, std::vector<Segment>> targeted;
  std::map<std::string, bool> targeted_annotated;
  std::vector<std::vector<Segment>> additional;

  // Throws InputError for an unknown system.
  const std::vector<Segment>& Targeted(const std::string& system) const;
  std::vector<const Segment*> AllFor(std::size_t index) const;
};

}  // namespace edit_lens

#endif  // EDIT_LENS_CORPUS_H_
