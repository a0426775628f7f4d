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

#include "edit_lens/metrics.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "edit_lens/errors.h"
#include "oracles/ter_oracle.h"

namespace edit_lens {
namespace {

using oracle::Split;
using oracle::Words;

SystemOutput MakeSystem(const std::string& name, const std::vector<std::string>& lines) {
  SystemOutput out;
  out.system_name = name;
  for (std::size_t i = 0; i < lines.size(); ++i) out.segments.push_back(SegmentFromText(lines[i], i));
  return out;
}

std::vector<Segment> MakeSegments(const std::vector<std::string>& lines) {
  return MakeSystem("", lines).segments;
}

AlignmentSet Links(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  AlignmentSet a;
  for (auto [s, t] : pairs) a.Add(s, t);
  return a;
}

TEST(HterTest, IdenticalToPostEditIsZero) {
  const SystemOutput sys = MakeSystem("pbsy", {"a b c", "d e"});
  ReferenceSet refs;
  refs.targeted["pbsy"] = MakeSegments({"a b c", "d e"});
  const TerRun run = Hter(sys, refs, TerConfig{});
  EXPECT_DOUBLE_EQ(run.score.corpus_value, 0.0);
  EXPECT_EQ(run.score.name, "hter");
  EXPECT_EQ(run.score.system, "pbsy");
}

TEST(HterTest, CorpusValueIsWeightedNotMeanOfSegments) {
  const SystemOutput sys = MakeSystem("s", {"a b c x", "a b c d e x"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a b c d", "a b c d e f"});
  const TerRun run = Hter(sys, refs, TerConfig{});
  ASSERT_EQ(run.score.per_segment.size(), 2u);
  EXPECT_DOUBLE_EQ(run.score.per_segment[0].numerator, 1.0);
  EXPECT_DOUBLE_EQ(run.score.per_segment[1].denominator, 6.0);
  EXPECT_DOUBLE_EQ(run.score.corpus_value, 20.0);
  EXPECT_DOUBLE_EQ(run.score.RecomputeCorpusValue(), run.score.corpus_value);
}

TEST(HterTest, SizeMismatchAndMissingTargeted) {
  const SystemOutput sys = MakeSystem("s", {"a", "b"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a"});
  EXPECT_THROW(Hter(sys, refs, TerConfig{}), InputError);
  ReferenceSet none;
  EXPECT_THROW(Hter(sys, none, TerConfig{}), InputError);
}

TEST(HterTest, EmptyReferenceErrorNamesSegment) {
  SystemOutput sys = MakeSystem("s", {"a", "b"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a", ""});
  try {
    Hter(sys, refs, TerConfig{});
    FAIL();
  } catch (const ComputeError& e) {
    EXPECT_NE(std::string(e.what()).find("segment 1"), std::string::npos) << e.what();
  }
}

TEST(MterTest, ExactMatchAmongReferences) {
  const SystemOutput sys = MakeSystem("s", {"a b"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"x y"});
  refs.additional.push_back(MakeSegments({"a b"}));
  EXPECT_DOUBLE_EQ(Mter(sys, refs, TerConfig{}).score.corpus_value, 0.0);
}

TEST(MterTest, MeanReferenceLengthDenominator) {
  const SystemOutput sys = MakeSystem("s", {"a x"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a b"});
  refs.additional.push_back(MakeSegments({"a x c"}));
  const MterRun run = Mter(sys, refs, TerConfig{});
  ASSERT_EQ(run.segments.size(), 1u);
  EXPECT_EQ(run.segments[0].min_edits, 1);
  EXPECT_DOUBLE_EQ(run.segments[0].denominator, 2.5);
  EXPECT_DOUBLE_EQ(run.score.corpus_value, 40.0);

  const MterRun targeted = Mter(sys, refs, TerConfig{}, MterDenominator::kTargetedLength);
  EXPECT_DOUBLE_EQ(targeted.segments[0].denominator, 2.0);
}

TEST(MterTest, SingleReferenceEqualsHter) {
  const SystemOutput sys = MakeSystem("s", {"a c b d", "the house is red", "x"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a b c d", "the red house", "y z"});
  EXPECT_DOUBLE_EQ(Mter(sys, refs, TerConfig{}).score.corpus_value,
                   Hter(sys, refs, TerConfig{}).score.corpus_value);
}

TEST(MterTest, NeverAboveHterOnEdits) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> sym(0, 3);
  auto random_line = [&] {
    std::string s;
    for (int k = len(gen); k > 0; --k) s += std::string(1, static_cast<char>('a' + sym(gen))) + " ";
    return s;
  };
  std::vector<std::string> out_a, out_b, pe_a, pe_b, extra;
  for (int i = 0; i < 60; ++i) {
    out_a.push_back(random_line());
    out_b.push_back(random_line());
    pe_a.push_back(random_line());
    pe_b.push_back(random_line());
    extra.push_back(random_line());
  }
  ReferenceSet refs;
  refs.targeted["a"] = MakeSegments(pe_a);
  refs.targeted["b"] = MakeSegments(pe_b);
  refs.additional.push_back(MakeSegments(extra));
  for (const auto& sys : {MakeSystem("a", out_a), MakeSystem("b", out_b)}) {
    const TerRun h = Hter(sys, refs, TerConfig{});
    const MterRun m = Mter(sys, refs, TerConfig{}, MterDenominator::kTargetedLength);
    for (std::size_t i = 0; i < 60; ++i) {
      EXPECT_LE(m.segments[i].min_edits, h.score.per_segment[i].numerator);
    }
    EXPECT_LE(m.score.corpus_value, h.score.corpus_value);
  }
}

TEST(MterTest, ThreadCountDoesNotChangeResults) {
  std::vector<std::string> hyp, ref;
  for (int i = 0; i < 40; ++i) {
    hyp.push_back("w" + std::to_string(i % 7) + " b a c" + std::string(i % 3, ' ') + " d");
    ref.push_back("a b c d w" + std::to_string(i % 5));
  }
  const SystemOutput sys = MakeSystem("s", hyp);
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments(ref);
  const MterRun one = Mter(sys, refs, TerConfig{}, MterDenominator::kMeanRefLength, 1);
  const MterRun many = Mter(sys, refs, TerConfig{}, MterDenominator::kMeanRefLength, 4);
  EXPECT_EQ(one.score.corpus_value, many.score.corpus_value);
  for (std::size_t i = 0; i < one.segments.size(); ++i) {
    EXPECT_EQ(one.segments[i].min_edits, many.segments[i].min_edits);
  }
}

TEST(HterNoShiftTest, PunctuationAndOrderIgnored) {
  const SystemOutput sys = MakeSystem("s", {"b a ."});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"a b !"});
  const TerRun run = HterNoShift(sys, refs, CompareOn::kSurface);
  EXPECT_DOUBLE_EQ(run.score.corpus_value, 0.0);
  EXPECT_EQ(run.score.name, "hter_noshift_word");
}

TEST(HterNoShiftTest, LemmaMergesInflections) {
  SystemOutput sys = MakeSystem("s", {"die Hunde bellen"});
  ReferenceSet refs;
  refs.targeted["s"] = MakeSegments({"die Hund bellen"});
  sys.segments[0].tokens[1].lemma = "Hund";
  refs.targeted["s"][0].tokens[1].lemma = "Hund";
  const TerRun word = HterNoShift(sys, refs, CompareOn::kSurface);
  const TerRun lemma = HterNoShift(sys, refs, CompareOn::kLemma);
  EXPECT_EQ(word.score.per_segment[0].numerator, 1.0);
  EXPECT_EQ(lemma.score.per_segment[0].numerator, 0.0);
  EXPECT_EQ(lemma.score.name, "hter_noshift_lemma");
}

// Free-shift TER sits between the bag-of-words bound and plain edit distance.
TEST(HterNoShiftTest, BetweenPerAndLevenshteinExhaustive) {
  std::vector<Words> all{{}};
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<Words> next;
    for (const Words& w : all) {
      if (w.size() != len - 1) continue;
      for (const char* s : {"a", "b", "c"}) {
        Words x = w;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  ASSERT_EQ(all.size(), 1093u);
  TerConfig config;
  config.shift_cost = 0;
  config.strip_punct = true;
  long checked = 0;
  for (std::size_t r = 0; r < all.size(); ++r) {
    if (all[r].empty()) continue;
    for (std::size_t h = 0; h < all.size(); ++h) {
      const int edits = TerAlignWords(all[h], all[r], config).edits;
      ASSERT_GE(edits, oracle::PerEdits(all[h], all[r]));
      ASSERT_LE(edits, oracle::Levenshtein(all[h], all[r]));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1092L * 1093L);
}

TEST(BleuTest, IdenticalIsHundred) {
  const auto segs = MakeSegments({"a b c d e", "f g h i"});
  EXPECT_NEAR(CorpusBleu(segs, segs).score, 100.0, 1e-9);
}

TEST(BleuTest, BrevityPenalty) {
  const BleuResult r = CorpusBleu(MakeSegments({"a b"}), MakeSegments({"a b c d"}),
                                  BleuConfig{.max_n = 2});
  EXPECT_NEAR(r.brevity_penalty, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(r.score, 100.0 * std::exp(-1.0), 1e-9);
}

TEST(BleuTest, NoFourGramMatchStaysPositive) {
  const BleuResult r = CorpusBleu(MakeSegments({"a b x c d"}), MakeSegments({"a b y c d"}));
  const double expected =
      100.0 * std::exp(0.25 * (std::log(4.0 / 5) + std::log(2.0 / 4) + std::log(1e-9 / 3) +
                               std::log(1e-9 / 2)));
  EXPECT_GT(r.score, 0.0);
  EXPECT_LT(r.score, 100.0);
  EXPECT_NEAR(r.score, expected, expected * 1e-9);
  ASSERT_EQ(r.precisions.size(), 4u);
  EXPECT_DOUBLE_EQ(r.precisions[0], 0.8);
}

TEST(BleuTest, ClippedCountsAndOrderInvariance) {
  const auto hyp = MakeSegments({"the the the the", "a cat sat on the mat"});
  const auto ref = MakeSegments({"the cat is here", "a cat sat on a mat"});
  const BleuResult r = CorpusBleu(hyp, ref, BleuConfig{.max_n = 1});
  // Clipped unigram matches: 1 + 5 out of 10 hypothesis tokens.
  EXPECT_DOUBLE_EQ(r.precisions[0], 0.6);
  const auto hyp_rev = MakeSegments({"a cat sat on the mat", "the the the the"});
  const auto ref_rev = MakeSegments({"a cat sat on a mat", "the cat is here"});
  EXPECT_DOUBLE_EQ(CorpusBleu(hyp_rev, ref_rev).score, CorpusBleu(hyp, ref).score);
}

TEST(BleuTest, Errors) {
  EXPECT_THROW(CorpusBleu({}, {}), ComputeError);
  EXPECT_THROW(CorpusBleu(MakeSegments({"a"}), MakeSegments({"a", "b"})), ComputeError);
}

TEST(PerTest, Examples) {
  EXPECT_DOUBLE_EQ(Per(SegmentFromText("b a"), SegmentFromText("a b")), 0.0);
  EXPECT_DOUBLE_EQ(Per(SegmentFromText("a a"), SegmentFromText("a b")), 0.5);
  EXPECT_DOUBLE_EQ(Per(SegmentFromText(""), SegmentFromText("a")), 1.0);
  EXPECT_THROW(Per(SegmentFromText("a"), SegmentFromText("")), ComputeError);
}

TEST(PerTest, AgreesWithOracle) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> sym(0, 4);
  for (int t = 0; t < 300; ++t) {
    Words h(len(gen)), r(len(gen));
    for (auto& w : h) w = std::string(1, static_cast<char>('a' + sym(gen)));
    for (auto& w : r) w = std::string(1, static_cast<char>('a' + sym(gen)));
    EXPECT_EQ(PerEdits(h, r), oracle::PerEdits(h, r));
  }
}

TEST(KrsTest, MonotoneIsOne) {
  const Segment src = SegmentFromText("x y z");
  const Segment tgt = SegmentFromText("p q r");
  EXPECT_DOUBLE_EQ(*Krs(src, tgt, Links({{0, 0}, {1, 1}, {2, 2}})), 1.0);
}

TEST(KrsTest, ReversalOfTwoIsZero) {
  const Segment src = SegmentFromText("x y");
  const Segment tgt = SegmentFromText("p q");
  EXPECT_DOUBLE_EQ(*Krs(src, tgt, Links({{0, 1}, {1, 0}})), 0.0);
}

TEST(KrsTest, OneAdjacentSwapOfThree) {
  const Segment src = SegmentFromText("x y z");
  const Segment tgt = SegmentFromText("p q r");
  EXPECT_NEAR(*Krs(src, tgt, Links({{0, 1}, {1, 0}, {2, 2}})), 1.0 - std::sqrt(1.0 / 3.0), 1e-12);
}

TEST(KrsTest, EmptyAlignmentIsSkippedAndBadLinkRejected) {
  const Segment src = SegmentFromText("x y");
  EXPECT_FALSE(Krs(src, SegmentFromText("p q"), AlignmentSet{}).has_value());
  EXPECT_THROW(Krs(src, SegmentFromText("p"), Links({{0, 3}})), InputError);
}

TEST(KrsTest, BrevityPenaltyUsesCoverage) {
  const Segment src = SegmentFromText("x y z w");
  const Segment tgt = SegmentFromText("p q r s");
  const double v = *Krs(src, tgt, Links({{0, 0}, {1, 1}}));
  EXPECT_NEAR(v, std::exp(1.0 - 4.0 / 2.0), 1e-12);
  KrsConfig no_bp;
  no_bp.brevity_penalty = false;
  EXPECT_DOUBLE_EQ(*Krs(src, tgt, Links({{0, 0}, {1, 1}}), no_bp), 1.0);
}

TEST(KrsTest, ManyToManyCollapse) {
  // Target token 0 links to source 2 and 0; min collapse puts it first.
  const Segment src = SegmentFromText("x y z");
  const Segment tgt = SegmentFromText("p q");
  const AlignmentSet a = Links({{0, 0}, {2, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(*Krs(src, tgt, a), 1.0);
  KrsConfig mean;
  mean.collapse = KrsCollapse::kMeanSource;
  mean.brevity_penalty = false;
  // Mean collapse gives 1.0 then 1.0: a tie, which is not discordant.
  EXPECT_DOUBLE_EQ(*Krs(src, tgt, a, mean), 1.0);
}

TEST(KrsTest, ExtraDiscordantPairStrictlyLowers) {
  std::vector<double> seq{0, 1, 2, 3, 4, 5};
  double prev = KendallSimilarity(seq);
  EXPECT_DOUBLE_EQ(prev, 1.0);
  // Bubble the last element leftwards; each step adds one inversion.
  for (std::size_t i = seq.size() - 1; i > 0; --i) {
    std::swap(seq[i], seq[i - 1]);
    const double cur = KendallSimilarity(seq);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
}

TEST(KrsTest, PairAndCorpus) {
  const std::vector<Segment> src = MakeSegments({"s0 s1 s2", "s0 s1", "s0"});
  const std::vector<Segment> mt = MakeSegments({"m0 m1 m2", "m0 m1", "m0"});
  const std::vector<Segment> pe = MakeSegments({"p0 p1 p2", "p0 p1", "p0"});
  const std::vector<AlignmentSet> src_mt{Links({{0, 0}, {1, 1}, {2, 2}}), Links({{0, 0}, {1, 1}}),
                                         AlignmentSet{}};
  const std::vector<AlignmentSet> src_pe{Links({{0, 0}, {1, 1}, {2, 2}}), Links({{0, 1}, {1, 0}}),
                                         Links({{0, 0}})};
  EXPECT_DOUBLE_EQ(*KrsPair(src[0], mt[0], pe[0], src_mt[0], src_pe[0]), 1.0);
  EXPECT_DOUBLE_EQ(*KrsPair(src[1], mt[1], pe[1], src_mt[1], src_pe[1]), 0.0);
  const KrsResult r = CorpusKrs(src, mt, pe, src_mt, src_pe);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_DOUBLE_EQ(r.corpus_value, 50.0);
  EXPECT_FALSE(r.per_segment[2].has_value());
}

}  // namespace
}  // namespace edit_lens
