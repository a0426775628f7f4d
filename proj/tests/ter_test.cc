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

#include "edit_lens/ter.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "edit_lens/errors.h"
#include "oracles/ter_oracle.h"

namespace edit_lens {
namespace {

using oracle::Split;
using oracle::Words;

TerResult Align(const std::string& hyp, const std::string& ref, int shift_cost = 1) {
  TerConfig config;
  config.shift_cost = shift_cost;
  return TerAlign(SegmentFromText(hyp), SegmentFromText(ref), config);
}

Words RandomWords(std::mt19937& gen, std::size_t max_len, int vocab, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> sym(0, vocab - 1);
  Words w(len_dist(gen));
  for (auto& x : w) x = std::string(1, static_cast<char>('a' + sym(gen)));
  return w;
}

TEST(TerAlignTest, IdentityScoresZero) {
  const TerResult r = Align("a b c", "a b c");
  EXPECT_EQ(r.edits, 0);
  EXPECT_EQ(r.ref_len, 3);
  EXPECT_DOUBLE_EQ(r.Score(), 0.0);
  EXPECT_EQ(r.shifts, 0);
}

TEST(TerAlignTest, SingleShift) {
  const TerResult r = Align("a c b d", "a b c d");
  EXPECT_EQ(r.edits, 1);
  EXPECT_EQ(r.shifts, 1);
  EXPECT_DOUBLE_EQ(r.Score(), 0.25);
  EXPECT_EQ(oracle::ExactTerEdits(Split("a c b d"), Split("a b c d"), 1), 1);
}

TEST(TerAlignTest, EmptyHypothesisIsAllInserts) {
  const TerResult r = Align("", "a b");
  EXPECT_EQ(r.edits, 2);
  EXPECT_EQ(r.insertions, 2);
  EXPECT_DOUBLE_EQ(r.Score(), 1.0);
}

TEST(TerAlignTest, FreeShiftsReorderAtNoCost) {
  const TerResult r = Align("b a", "a b", 0);
  EXPECT_EQ(r.edits, 0);
  EXPECT_EQ(oracle::PerEdits(Split("b a"), Split("a b")), 0);
}

TEST(TerAlignTest, FreeShiftsCrossCostPlateaus) {
  // Every single move keeps the edit cost at 2 here.
  EXPECT_EQ(Align("c b a", "a b c", 0).edits, 0);
  EXPECT_EQ(Align("c b a", "a b c", 1).edits, 2);
}

TEST(TerAlignTest, FreeShiftsReachBagOfWordsOnDistinctPermutations) {
  TerConfig config;
  config.shift_cost = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    Words ref;
    for (std::size_t k = 0; k < n; ++k) ref.push_back("t" + std::to_string(k));
    Words hyp = ref;
    do {
      ASSERT_EQ(TerAlignWords(hyp, ref, config).edits, 0);
    } while (std::next_permutation(hyp.begin(), hyp.end()));
  }
}

TEST(TerAlignTest, EmptyReferenceIsAnError) {
  Segment ref = SegmentFromText(". ,", 7);
  TerConfig config;
  config.strip_punct = true;
  try {
    TerAlign(SegmentFromText("a"), ref, config);
    FAIL() << "expected ComputeError";
  } catch (const ComputeError& e) {
    EXPECT_NE(std::string(e.what()).find("segment 7"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("empty reference"), std::string::npos);
  }
}

TEST(TerAlignTest, ConfigValidation) {
  TerConfig config;
  config.max_shift_block = 0;
  EXPECT_THROW(config.Validate(), InputError);
  config = TerConfig{};
  config.shift_cost = 2;
  EXPECT_THROW(config.Validate(), InputError);
}

TEST(TerAlignTest, LemmaProjectionFallsBackToSurface) {
  Segment hyp = SegmentFromText("Hunde bellen");
  Segment ref = SegmentFromText("Hund bellen");
  hyp.tokens[0].lemma = "Hund";
  ref.tokens[0].lemma = "Hund";
  TerConfig config;
  EXPECT_EQ(TerAlign(hyp, ref, config).edits, 1);
  config.compare_on = CompareOn::kLemma;
  EXPECT_EQ(TerAlign(hyp, ref, config).edits, 0);
}

TEST(TerAlignTest, LowercaseSwitch) {
  TerConfig config;
  EXPECT_EQ(TerAlign(SegmentFromText("Das Haus"), SegmentFromText("das haus"), config).edits, 2);
  config.lowercase = true;
  EXPECT_EQ(TerAlign(SegmentFromText("Das Haus"), SegmentFromText("das haus"), config).edits, 0);
  EXPECT_EQ(TerAlign(SegmentFromText("ÜBER"), SegmentFromText("über"), config).edits, 0);
}

TEST(TerAlignTest, StripPunctNeverIncreasesEditsOnPunctOnlyDifferences) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"a , b .", "a b !"}, {"a b", "a b ."}, {"( a ) b", "a b"}, {"a ... b", "a - b ?"}};
  for (const auto& [h, r] : pairs) {
    TerConfig keep;
    TerConfig strip;
    strip.strip_punct = true;
    const int kept = TerAlign(SegmentFromText(h), SegmentFromText(r), keep).edits;
    const int stripped = TerAlign(SegmentFromText(h), SegmentFromText(r), strip).edits;
    EXPECT_LE(stripped, kept) << h << " / " << r;
    EXPECT_EQ(stripped, 0) << h << " / " << r;
  }
}

TEST(TerScoreTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(TerScore(1, 4), 0.25);
  EXPECT_DOUBLE_EQ(TerScore(0, 9), 0.0);
  EXPECT_DOUBLE_EQ(TerScore(5, 4), 1.25);
  EXPECT_THROW(TerScore(1, 0), ComputeError);
}

TEST(ShiftBlocksTest, NoShifts) {
  EXPECT_TRUE(ShiftBlocks(Align("a b c", "a b d").trace).empty());
}

TEST(ShiftBlocksTest, SingleBlockWithLandingSpan) {
  const TerResult r = Align("a c b d", "a b c d");
  const std::vector<ShiftBlock> blocks = ShiftBlocks(r.trace);
  ASSERT_EQ(blocks.size(), 1u);
  ASSERT_EQ(blocks[0].tokens.size(), 1u);
  const std::string& tok = blocks[0].tokens[0];
  EXPECT_TRUE(tok == "b" || tok == "c");
  EXPECT_EQ(r.trace.ref_words[blocks[0].ref_span.start], tok);
}

// Every sequence of exactly `depth` block moves (blocks occurring in the
// reference) that turns hyp into ref, as the list of moved blocks.
void ShiftPaths(const Words& hyp, const Words& ref, int depth, std::vector<Words>& path,
                std::set<std::vector<Words>>& out) {
  if (depth == 0) {
    if (hyp == ref) out.insert(path);
    return;
  }
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    for (std::size_t len = 1; i + len <= hyp.size(); ++len) {
      const Words block(hyp.begin() + i, hyp.begin() + i + len);
      if (!oracle::OccursIn(block, ref)) break;
      Words rest(hyp.begin(), hyp.begin() + i);
      rest.insert(rest.end(), hyp.begin() + i + len, hyp.end());
      for (std::size_t p = 0; p <= rest.size(); ++p) {
        if (p == i) continue;
        Words moved = rest;
        moved.insert(moved.begin() + p, block.begin(), block.end());
        path.push_back(block);
        ShiftPaths(moved, ref, depth - 1, path, out);
        path.pop_back();
      }
    }
  }
}

TEST(ShiftBlocksTest, TwoIndependentShiftsInApplicationOrder) {
  const Words hyp = Split("b a c d f e");
  const Words ref = Split("a b c d e f");
  ASSERT_EQ(oracle::ExactTerEdits(hyp, ref, 1), 2);
  std::set<std::vector<Words>> optimal;
  std::vector<Words> path;
  ShiftPaths(hyp, ref, 2, path, optimal);
  ASSERT_FALSE(optimal.empty());

  const TerResult r = Align("b a c d f e", "a b c d e f");
  EXPECT_EQ(r.edits, 2);
  const std::vector<ShiftBlock> blocks = ShiftBlocks(r.trace);
  ASSERT_EQ(blocks.size(), 2u);
  const std::vector<Words> got{blocks[0].tokens, blocks[1].tokens};
  EXPECT_TRUE(optimal.count(got)) << "greedy block sequence is not an optimal shift path";
  // The first recorded shift fixes the left swap.
  EXPECT_TRUE(blocks[0].tokens == Words{"a"} || blocks[0].tokens == Words{"b"});
}

// Neither shift pays off on its own here, so greedy search stops at plain
// edit distance while the exhaustive search finds two shifts.
TEST(ShiftBlocksTest, GreedyStopsWhenNoSingleShiftGains) {
  const Words hyp = Split("c a b f d e");
  const Words ref = Split("a b c d e f");
  EXPECT_EQ(oracle::ExactTerEdits(hyp, ref, 1), 2);
  const TerResult r = TerAlignWords(hyp, ref, TerConfig{});
  EXPECT_EQ(r.edits, oracle::Levenshtein(hyp, ref));
  EXPECT_TRUE(ShiftBlocks(r.trace).empty());
}

TEST(ReplayTest, ReproducesReferenceOnRandomPairs) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Words hyp = RandomWords(gen, 9, 4);
    const Words ref = RandomWords(gen, 9, 4, 1);
    TerConfig config;
    const TerResult r = TerAlignWords(hyp, ref, config);
    EXPECT_EQ(ReplayTrace(r.trace), ref);
    // Counted edits agree with the trace.
    EXPECT_EQ(r.edits, r.substitutions + r.insertions + r.deletions + r.shifts);
    for (const EditOp& op : r.trace.ops) {
      switch (op.kind) {
        case EditKind::kMatch:
        case EditKind::kSubstitute:
          ASSERT_TRUE(op.hyp_span && op.ref_span);
          EXPECT_EQ(op.hyp_span->len, 1u);
          EXPECT_EQ(op.ref_span->len, 1u);
          break;
        case EditKind::kInsert:
          EXPECT_FALSE(op.hyp_span);
          EXPECT_TRUE(op.ref_span);
          break;
        case EditKind::kDelete:
          EXPECT_TRUE(op.hyp_span);
          EXPECT_FALSE(op.ref_span);
          break;
        case EditKind::kShift:
          ASSERT_TRUE(op.hyp_span && op.ref_span);
          EXPECT_GE(op.hyp_span->len, 1u);
          EXPECT_EQ(op.hyp_span->len, op.ref_span->len);
          EXPECT_NE(op.shift_distance, 0);
          break;
      }
    }
  }
}

TEST(TerPropertyTest, BoundedByLevenshteinAndExactOracle) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Words hyp = RandomWords(gen, 7, 4);
    const Words ref = RandomWords(gen, 7, 4, 1);
    const TerResult r = TerAlignWords(hyp, ref, TerConfig{});
    EXPECT_LE(r.edits, oracle::Levenshtein(hyp, ref));
    EXPECT_EQ(LevenshteinDistance(hyp, ref), oracle::Levenshtein(hyp, ref));
    EXPECT_GE(r.edits, oracle::ExactTerEdits(hyp, ref, 1));
    EXPECT_EQ(TerAlignWords(hyp.empty() ? ref : hyp, hyp.empty() ? ref : hyp, TerConfig{}).edits,
              0);
  }
}

// Hand-checked pairs where greedy search must find the exact optimum.
TEST(TerPropertyTest, CuratedRegressionSetMatchesOracle) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"a c b d", "a b c d"},
      {"b a c d f e", "a b c d e f"},
      {"gestern habe ich ihn gesehen", "habe ich ihn gestern gesehen"},
      {"the cat sat on the mat", "on the mat the cat sat"},
      {"er hat nicht das gesagt", "er hat das nicht gesagt"},
      {"x y z", "z x y"},
      {"a b c d e", "e d c b a"},
      {"a a b b", "b b a a"},
  };
  for (const auto& [h, r] : pairs) {
    EXPECT_EQ(Align(h, r).edits, oracle::ExactTerEdits(Split(h), Split(r), 1)) << h << " | " << r;
  }
}

TEST(TerPropertyTest, CapsLimitShiftSearch) {
  TerConfig config;
  config.max_shift_distance = 1;
  // Moving "c" to the front needs distance 2.
  const Words hyp = Split("a b c");
  const Words ref = Split("c a b");
  EXPECT_EQ(TerAlignWords(hyp, ref, config).shifts, 0);
  config.max_shift_distance = 2;
  EXPECT_EQ(TerAlignWords(hyp, ref, config).edits, 1);
}

}  // namespace
}  // namespace edit_lens
