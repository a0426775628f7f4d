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

#include "edit_lens/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "edit_lens/errors.h"
#include "edit_lens/unicode.h"

namespace edit_lens {
namespace {

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out.push_back(std::move(word));
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool IsBlank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return c == ' ' || c == '\t'; });
}

std::optional<std::string> Field(const std::string& value) {
  if (value.empty() || value == "_") return std::nullopt;
  return value;
}

[[noreturn]] void Fail(const std::string& name, std::size_t line, const std::string& what) {
  throw InputError(name + ":" + std::to_string(line) + ": " + what);
}

std::vector<Segment> ParsePlain(std::istream& in, const std::vector<std::string>& extra) {
  std::vector<Segment> segments;
  std::string line;
  while (std::getline(in, line)) {
    StripCarriageReturn(line);
    Segment seg;
    seg.id = segments.size();
    for (std::string& word : SplitWhitespace(line)) {
      seg.tokens.push_back(MakeToken(std::move(word), extra));
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::vector<Segment> ParseConllu(std::istream& in, const std::vector<std::string>& extra,
                                 const std::string& name) {
  std::vector<Segment> segments;
  Segment current;
  bool open = false;
  long expected_id = 1;
  std::size_t lineno = 0;
  std::string line;

  auto close_block = [&] {
    if (!open) return;
    current.id = segments.size();
    segments.push_back(std::move(current));
    current = Segment{};
    open = false;
    expected_id = 1;
  };

  while (std::getline(in, line)) {
    ++lineno;
    StripCarriageReturn(line);
    if (IsBlank(line)) {
      close_block();
      continue;
    }
    if (line[0] == '#') continue;
    const std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() < 8) {
      Fail(name, lineno, "expected >=8 columns, found " + std::to_string(cols.size()));
    }
    const std::string& id_text = cols[0];
    // Multiword ranges ("3-4") and empty nodes ("5.1") are not tokens.
    if (id_text.find_first_of("-.") != std::string::npos) continue;
    long id = 0;
    const auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
      Fail(name, lineno, "non-integer token ID '" + id_text + "'");
    }
    if (id != expected_id) {
      Fail(name, lineno,
           "token ID " + std::to_string(id) + " where " + std::to_string(expected_id) +
               " was expected");
    }
    ++expected_id;
    if (cols[1].empty() || cols[1].find(' ') != std::string::npos) {
      Fail(name, lineno, "FORM must be a single non-empty token");
    }
    Token token = MakeToken(cols[1], extra);
    token.lemma = Field(cols[2]);
    token.pos = Field(cols[3]);
    token.dep_label = Field(cols[7]);
    if (token.dep_label && !token.pos) {
      Fail(name, lineno, "dependency label without a POS tag");
    }
    current.tokens.push_back(std::move(token));
    open = true;
  }
  close_block();
  return segments;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  return in;
}

}  // namespace

Token MakeToken(std::string surface, const std::vector<std::string>& extra_punct) {
  Token token;
  token.surface = std::move(surface);
  token.is_punct = IsPunct(token, extra_punct);
  return token;
}

bool IsPunct(const Token& token, const std::vector<std::string>& extra_punct) {
  return IsPunctuation(token.surface, extra_punct);
}

Segment SegmentFromText(const std::string& text, std::size_t id,
                        const std::vector<std::string>& extra_punct) {
  Segment seg;
  seg.id = id;
  for (std::string& word : SplitWhitespace(text)) {
    seg.tokens.push_back(MakeToken(std::move(word), extra_punct));
  }
  return seg;
}

SegmentFormat FormatForPath(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return (ext == ".conll" || ext == ".conllu") ? SegmentFormat::kConllu : SegmentFormat::kPlain;
}

std::vector<Segment> ParseSegments(std::istream& in, SegmentFormat format,
                                   const std::vector<std::string>& extra_punct,
                                   const std::string& source_name) {
  std::vector<Segment> segments = format == SegmentFormat::kPlain
                                      ? ParsePlain(in, extra_punct)
                                      : ParseConllu(in, extra_punct, source_name);
  if (segments.empty()) throw InputError(source_name + ": empty file");
  return segments;
}

std::vector<Segment> ParseSegmentsFile(const std::filesystem::path& path, SegmentFormat format,
                                       const std::vector<std::string>& extra_punct) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSegments(in, format, extra_punct, path.string());
}

std::string ToPlainText(const std::vector<Segment>& segments) {
  std::string out;
  for (const Segment& seg : segments) {
    for (std::size_t i = 0; i < seg.tokens.size(); ++i) {
      if (i) out += ' ';
      out += seg.tokens[i].surface;
    }
    out += '\n';
  }
  return out;
}

void AlignmentSet::Add(std::size_t source, std::size_t target) {
  const AlignmentLink link{source, target};
  auto it = std::lower_bound(links.begin(), links.end(), link);
  if (it == links.end() || *it != link) links.insert(it, link);
}

std::vector<AlignmentSet> ParseAlignments(std::istream& in, const std::string& source_name) {
  std::vector<AlignmentSet> out;
  std::size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    StripCarriageReturn(line);
    AlignmentSet set;
    for (const std::string& pair : SplitWhitespace(line)) {
      const std::size_t dash = pair.find('-');
      if (dash == std::string::npos) {
        Fail(source_name, lineno, "missing '-' in alignment link '" + pair + "'");
      }
      std::size_t src = 0;
      std::size_t tgt = 0;
      const char* begin = pair.data();
      const char* mid = begin + dash;
      const char* end = begin + pair.size();
      const auto r1 = std::from_chars(begin, mid, src);
      const auto r2 = std::from_chars(mid + 1, end, tgt);
      if (dash == 0 || r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() ||
          r2.ptr != end || mid + 1 == end) {
        Fail(source_name, lineno, "non-numeric alignment link '" + pair + "'");
      }
      set.Add(src, tgt);
    }
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<AlignmentSet> ParseAlignmentsFile(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseAlignments(in, path.string());
}

void ValidateAlignment(const AlignmentSet& alignment, std::size_t source_len,
                       std::size_t target_len) {
  for (const AlignmentLink& link : alignment.links) {
    if (link.source >= source_len || link.target >= target_len) {
      throw InputError("link " + std::to_string(link.source) + "-" +
                       std::to_string(link.target) + " out of range (source length " +
                       std::to_string(source_len) + ", target length " +
                       std::to_string(target_len) + ")");
    }
  }
}

const std::vector<Segment>& ReferenceSet::Targeted(const std::string& system) const {
  auto it = targeted.find(system);
  if (it == targeted.end()) throw InputError("no targeted post-edit for system " + system);
  return it->second;
}

std::vector<const Segment*> ReferenceSet::AllFor(std::size_t index) const {
  std::vector<const Segment*> out;
  for (const auto& [name, segs] : targeted) {
    if (index < segs.size()) out.push_back(&segs[index]);
  }
  for (const auto& segs : additional) {
    if (index < segs.size()) out.push_back(&segs[index]);
  }
  return out;
}

}  // namespace edit_lens
