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

#ifndef EDIT_LENS_UNICODE_H_
#define EDIT_LENS_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace edit_lens {

// Full Unicode lowercasing of a UTF-8 string (root locale).
std::string ToLowerUtf8(std::string_view text);

// True iff `text` is non-empty and every code point is in a Unicode P*
// category or occurs in one of the `extra` strings. Invalid UTF-8 is never
// punctuation.
bool IsPunctuation(std::string_view text, const std::vector<std::string>& extra);

}  // namespace edit_lens

#endif  // EDIT_LENS_UNICODE_H_
