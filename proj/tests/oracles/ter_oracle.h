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

#ifndef EDIT_LENS_TESTS_ORACLES_TER_ORACLE_H_
#define EDIT_LENS_TESTS_ORACLES_TER_ORACLE_H_

// Test-only reference implementations. Nothing here calls into the library.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace edit_lens::oracle {

using Words = std::vector<std::string>;

// Textbook full-matrix Levenshtein.
inline int Levenshtein(const Words& a, const Words& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline bool OccursIn(const Words& block, const Words& ref) {
  if (block.size() > ref.size()) return false;
  for (std::size_t j = 0; j + block.size() <= ref.size(); ++j) {
    if (std::equal(block.begin(), block.end(), ref.begin() + j)) return true;
  }
  return false;
}

// Every hypothesis reachable by moving one contiguous block that occurs
// verbatim in the reference to any other position.
inline std::vector<Words> OneShiftNeighbours(const Words& hyp, const Words& ref) {
  std::vector<Words> out;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    for (std::size_t len = 1; i + len <= hyp.size(); ++len) {
      const Words block(hyp.begin() + i, hyp.begin() + i + len);
      if (!OccursIn(block, ref)) break;
      Words rest(hyp.begin(), hyp.begin() + i);
      rest.insert(rest.end(), hyp.begin() + i + len, hyp.end());
      for (std::size_t p = 0; p <= rest.size(); ++p) {
        if (p == i) continue;
        Words moved = rest;
        moved.insert(moved.begin() + p, block.begin(), block.end());
        out.push_back(std::move(moved));
      }
    }
  }
  return out;
}

// Exact minimum of Levenshtein + shift_cost * shifts over all legal shift
// sequences, by breadth-first search over hypothesis states.
inline int ExactTerEdits(const Words& hyp, const Words& ref, int shift_cost) {
  int best = Levenshtein(hyp, ref);
  std::set<Words> seen{hyp};
  std::vector<Words> frontier{hyp};
  for (int k = 1; !frontier.empty(); ++k) {
    if (shift_cost > 0 && k * shift_cost >= best) break;
    std::vector<Words> next;
    for (const Words& state : frontier) {
      for (Words& n : OneShiftNeighbours(state, ref)) {
        if (!seen.insert(n).second) continue;
        best = std::min(best, Levenshtein(n, ref) + k * shift_cost);
        next.push_back(std::move(n));
      }
    }
    if (best == 0) break;
    frontier = std::move(next);
  }
  return best;
}

// Bag-of-words error count: max(|h|,|r|) - |multiset intersection|.
inline int PerEdits(const Words& hyp, const Words& ref) {
  std::map<std::string, int> h;
  std::map<std::string, int> r;
  for (const auto& w : hyp) ++h[w];
  for (const auto& w : ref) ++r[w];
  int common = 0;
  for (const auto& [w, c] : h) {
    auto it = r.find(w);
    if (it != r.end()) common += std::min(c, it->second);
  }
  return static_cast<int>(std::max(hyp.size(), ref.size())) - common;
}

inline Words Split(const std::string& text) {
  Words out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace edit_lens::oracle

#endif  // EDIT_LENS_TESTS_ORACLES_TER_ORACLE_H_
