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

#include "edit_lens/unicode.h"

#include <unicode/uchar.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace edit_lens {
namespace {

bool InExtra(UChar32 c, const std::vector<std::string>& extra) {
  for (const std::string& entry : extra) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(entry.data());
    const int32_t len = static_cast<int32_t>(entry.size());
    int32_t i = 0;
    while (i < len) {
      UChar32 e;
      U8_NEXT(bytes, i, len, e);
      if (e == c) return true;
    }
  }
  return false;
}

}  // namespace

std::string ToLowerUtf8(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

bool IsPunctuation(std::string_view text, const std::vector<std::string>& extra) {
  if (text.empty()) return false;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(bytes, i, len, c);
    if (c < 0) return false;
    if (!u_ispunct(c) && !InExtra(c, extra)) return false;
  }
  return true;
}

}  // namespace edit_lens
