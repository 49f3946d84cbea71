// Copyright 2026 The Jacquet Authors
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

#include "jacquet/langlands_oracle.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "jacquet/regular_regions.h"
#include "oracles.h"

namespace jacquet {
namespace {

using oracle::E;
using oracle::Half;
using oracle::Seg;

const CuspidalContext kOne{E(1)};

SubquotientParam P(std::vector<Segment> segs, Segment tail = Segment()) {
  return SubquotientParam{std::move(segs), tail};
}

TEST(LanglandsDatumTest, SortsAndValidates) {
  const LanglandsDatum l({Seg(-1, 2), Seg(1, 1)}, TemperedSymbol::Cuspidal());
  EXPECT_EQ(l.ToString(), "L([1],[-1,2];sigma)");
  EXPECT_THROW(LanglandsDatum({Seg(-1, 1)}, TemperedSymbol::Cuspidal()),
               std::invalid_argument);
  EXPECT_THROW(LanglandsDatum({Segment()}, TemperedSymbol::Cuspidal()),
               std::invalid_argument);
}

TEST(ParamTest, Rendering) {
  EXPECT_EQ(P({Seg(1, 2)}).ToString(), "L([1,2];sigma)");
  EXPECT_EQ(P({Seg(2, 2)}, Seg(1, 1)).ToString(), "L([2];d([1];sigma))");
  EXPECT_EQ(P({}, Seg(1, 2)).ToString(), "d([1,2];sigma)");
  EXPECT_EQ(ShortSegment(Seg(3, 3)), "[3]");
  EXPECT_EQ(ShortSegment(Seg(1, 3)), "[1,3]");
}

TEST(ParamTest, TailAndStandardModule) {
  EXPECT_EQ(TailSymbol(Seg(1, 2), kOne), TemperedSymbol::GenSteinberg(1));
  EXPECT_EQ(TailSymbol(Segment(), kOne), TemperedSymbol::Cuspidal());
  EXPECT_THROW(TailSymbol(Seg(2, 2), kOne), std::invalid_argument);
  EXPECT_EQ(StandardModule(P({Seg(2, 2)}, Seg(1, 1)), kOne),
            ClassicalBasisElement({Seg(2, 2)}, TemperedSymbol::GenSteinberg(0)));
  EXPECT_EQ(LadderLength(P({Seg(1, 2)})), 1);
  EXPECT_EQ(LadderLength(P({Seg(3, 3), Seg(2, 2)}, Seg(1, 1))), 2);
}

TEST(DetectionWordTest, KnownWords) {
  const TemperedSymbol sigma = TemperedSymbol::Cuspidal();
  EXPECT_EQ(DetectionWord(LanglandsDatum({Seg(1, 1)}, sigma), kOne), (Word{E(-1)}));
  EXPECT_EQ(DetectionWord(LanglandsDatum({Seg(1, 2)}, sigma), kOne),
            (Word{E(-1), E(-2)}));
  EXPECT_EQ(DetectionWord(LanglandsDatum({Seg(2, 2)}, TemperedSymbol::GenSteinberg(0)),
                          kOne),
            (Word{E(-2), E(1)}));
  EXPECT_THROW(
      DetectionWord(LanglandsDatum({}, TemperedSymbol::TauPM(Seg(-1, 1), PMSign::kPlus)),
                    kOne),
      OpaqueSymbolError);
}

TEST(DetectionWordTest, LeadingWords) {
  EXPECT_EQ(TemperedLeadingWord(TemperedSymbol::Cuspidal(), kOne), Word{});
  EXPECT_EQ(TemperedLeadingWord(TemperedSymbol::GenSteinberg(1), kOne),
            (Word{E(2), E(1)}));
  EXPECT_EQ(TemperedLeadingWord(TemperedSymbol::DualSteinberg(1), kOne),
            (Word{E(-2), E(-1)}));
}

// Every detection word of a ladder parameter has positive coefficient in its
// own standard module.
TEST(DetectionWordTest, PositiveInStandardModule) {
  for (const Exponent a : {Half(1), E(1), Half(3)}) {
    const CuspidalContext ctx(a);
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (const SubquotientParam& p : SubquotientEnumerate(n, ctx)) {
        const Word w = DetectionWord(ToDatum(p, ctx), ctx);
        EXPECT_GE(MultUpperBound(w, StandardModule(p, ctx), ctx), 1) << p.ToString();
      }
    }
  }
}

TEST(BoundTest, PointOverSigma) {
  for (const Exponent a : {Half(1), E(1)}) {
    const CuspidalContext ctx(a);
    const ClassicalElement x =
        ClassicalBasisElement({Segment::Point(a)}, TemperedSymbol::Cuspidal());
    EXPECT_EQ(MultUpperBound(Word{a}, x, ctx), 1);
    EXPECT_EQ(MultUpperBound(Word{-a}, x, ctx), 1);
  }
}

TEST(BoundTest, TensorBounds) {
  const ClassicalElement x =
      ClassicalBasisElement({Seg(-1, 1)}, TemperedSymbol::Cuspidal());
  const Word left{E(1), E(0), E(-1)};
  EXPECT_EQ(TensorMultUpperBound(left, {}, x, kOne), 2);
  EXPECT_EQ(TensorMultUpperBoundBySplitting(left, {}, x, kOne), 2);

  const ClassicalElement y =
      ClassicalBasisElement({Seg(-1, 1), Seg(1, 2)}, TemperedSymbol::Cuspidal());
  const Word right{E(-1), E(-2)};
  EXPECT_EQ(TensorMultUpperBound(left, right, y, kOne), 4);
  EXPECT_EQ(TensorMultUpperBoundBySplitting(left, right, y, kOne), 4);

  EXPECT_EQ(TensorMultUpperBound({}, Word{E(-1)},
                                 ClassicalBasisElement({Seg(1, 1)}, {}), kOne),
            MultUpperBound(Word{E(-1)}, ClassicalBasisElement({Seg(1, 1)}, {}), kOne));
}

TEST(TwoTermTest, LinkedAndUnlinked) {
  EXPECT_EQ(TwoTermGL({Seg(2, 2)}, Seg(1, 1)),
            (std::vector<std::vector<Segment>>{{Seg(2, 2), Seg(1, 1)}, {Seg(1, 2)}}));
  EXPECT_EQ(TwoTermGL({Seg(2, 3)}, Seg(0, 1)),
            (std::vector<std::vector<Segment>>{{Seg(2, 3), Seg(0, 1)}, {Seg(0, 3)}}));
  EXPECT_EQ(TwoTermGL({Seg(3, 3)}, Seg(1, 1)),
            (std::vector<std::vector<Segment>>{{Seg(3, 3), Seg(1, 1)}}));
  EXPECT_THROW(TwoTermGL({}, Seg(1, 1)), std::invalid_argument);
  EXPECT_THROW(TwoTermGL({Seg(1, 1)}, Seg(2, 2)), std::invalid_argument);
}

// L(a) x delta(D_k) and its summands have the same regular word sets.
TEST(TwoTermTest, WordsAreConserved) {
  const std::vector<std::pair<std::vector<Segment>, Segment>> cases = {
      {{Seg(2, 2)}, Seg(1, 1)},
      {{Seg(2, 3)}, Seg(0, 1)},
      {{Seg(4, 4), Seg(2, 3)}, Seg(1, 1)},
      {{Seg(3, 3)}, Seg(1, 1)}};
  for (const auto& [a, dk] : cases) {
    const WordSum lhs =
        Shuffle(RegularLWords(Multisegment(a)), WordSum(dk.DescendingWord()));
    WordSum rhs;
    for (const auto& summand : TwoTermGL(a, dk)) {
      rhs += RegularLWords(Multisegment(summand));
    }
    EXPECT_EQ(lhs, rhs) << Multisegment(a).ToString() << " x " << dk.ToString();
  }
}

TEST(CutTest, AtTempered) {
  const CutDecomposition d =
      DecomposeAtCut(1, 0, {Seg(2, 2)}, {}, Seg(1, 1), kOne);
  EXPECT_EQ(d.form, CutForm::kAtTempered);
  EXPECT_EQ(d.first, P({Seg(2, 2)}, Seg(1, 1)));
  EXPECT_EQ(d.second, P({}, Seg(1, 2)));
}

TEST(CutTest, Inner) {
  const CutDecomposition d =
      DecomposeAtCut(2, 1, {Seg(3, 3)}, {Seg(2, 2)}, Seg(1, 1), kOne);
  EXPECT_EQ(d.form, CutForm::kInner);
  EXPECT_EQ(d.first, P({Seg(3, 3), Seg(2, 2)}, Seg(1, 1)));
  EXPECT_EQ(d.second, P({Seg(2, 3)}, Seg(1, 1)));
}

TEST(CutTest, RejectsBrokenHypotheses) {
  EXPECT_THROW(DecomposeAtCut(2, 1, {Seg(2, 3)}, {Seg(2, 2)}, Seg(1, 1), kOne),
               std::invalid_argument);
  EXPECT_THROW(DecomposeAtCut(2, 1, {}, {Seg(2, 2)}, Seg(1, 1), kOne),
               std::invalid_argument);
  EXPECT_THROW(DecomposeAtCut(2, 1, {Seg(3, 3)}, {Seg(1, 2)}, Seg(1, 1), kOne),
               std::invalid_argument);
}

// Both summands of every valid cut, read as regions, add up to the words of
// L(upper) x| L(lower; delta(last; sigma)).
TEST(CutTest, SummandsSplitTheProductWords) {
  for (const Exponent a : {Half(1), E(1)}) {
    const CuspidalContext ctx(a);
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (const SubquotientParam& p : SubquotientEnumerate(n, ctx)) {
        for (std::size_t k = 1; k <= p.segs.size(); ++k) {
          const std::vector<Segment> upper(p.segs.begin(), p.segs.begin() + k);
          const std::vector<Segment> lower(p.segs.begin() + k, p.segs.end());
          if (lower.empty() && p.tail.empty()) continue;
          const Exponent top = lower.empty() ? p.tail.hi() : lower.front().hi();
          const std::int64_t cut = (top - a).twice() / 2;
          if (!SegLinked(upper.back(), lower.empty() ? p.tail : lower.front())) continue;

          const CutDecomposition d = DecomposeAtCut(n, cut, upper, lower, p.tail, ctx);
          EXPECT_EQ(d.first, p);
          EXPECT_NE(d.first, d.second);
          EXPECT_EQ(LadderLength(d.second), n);
          EXPECT_NE(DetectionWord(ToDatum(d.first, ctx), ctx),
                    DetectionWord(ToDatum(d.second, ctx), ctx));

          const SubquotientParam low{lower, p.tail};
          const ClassicalWordSum lhs =
              ClassicalShuffle(Classicalize(RegularLWords(Multisegment(upper))),
                               RegionWords(ParamRegion(low, ctx), cut, ctx));
          const ClassicalWordSum rhs = RegionWords(ParamRegion(d.first, ctx), n, ctx) +
                                       RegionWords(ParamRegion(d.second, ctx), n, ctx);
          EXPECT_EQ(lhs, rhs) << p.ToString() << " cut " << cut;
        }
      }
    }
  }
}

TEST(EnumerateTest, Counts) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto params = SubquotientEnumerate(n, kOne);
    EXPECT_EQ(params.size(), std::size_t{1} << (n + 1));
    std::set<std::string> names;
    for (const auto& p : params) names.insert(p.ToString());
    EXPECT_EQ(names.size(), params.size());
  }
  const auto one = SubquotientEnumerate(1, kOne);
  ASSERT_EQ(one.size(), 4u);
  EXPECT_EQ(one[0].ToString(), "L([1,2];sigma)");
  EXPECT_EQ(one[1].ToString(), "L([2],[1];sigma)");
  EXPECT_EQ(one[2].ToString(), "L([2];d([1];sigma))");
  EXPECT_EQ(one[3].ToString(), "d([1,2];sigma)");
}

TEST(EnumerateTest, HalfIntegralLadder) {
  const auto params = SubquotientEnumerate(1, CuspidalContext(Half(1)));
  ASSERT_EQ(params.size(), 4u);
  EXPECT_EQ(params[0].ToString(), "L([1/2,3/2];sigma)");
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(ClassifyCase(P({Seg(1, 2)})), CaseKind::kA);
  EXPECT_EQ(ClassifyCase(P({Seg(2, 2)}, Seg(1, 1))), CaseKind::kC);
  EXPECT_EQ(ClassifyCase(P({Seg(2, 3), Seg(1, 1)})), CaseKind::kB);
  EXPECT_EQ(ClassifyCase(P({Seg(3, 3), Seg(2, 2), Seg(1, 1)})), CaseKind::kException);
  EXPECT_EQ(ClassifyCase(P({}, Seg(1, 3))), CaseKind::kException);
  EXPECT_EQ(ToString(CaseKind::kB), "B");
}

TEST(ClassifyTest, ExactlyTwoExceptionsPerLadder) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    int exceptions = 0;
    for (const auto& p : SubquotientEnumerate(n, kOne)) {
      exceptions += ClassifyCase(p) == CaseKind::kException;
    }
    EXPECT_EQ(exceptions, 2) << n;
  }
}

TEST(AxiomTest, TableHasStableIds) {
  std::set<std::string> ids;
  for (const Axiom& a : AxiomTable()) {
    EXPECT_FALSE(a.statement.empty());
    ids.insert(a.id);
  }
  for (const char* id :
       {"AX-TAU-REDUCIBILITY", "AX-DELTA-PM", "AX-LANGLANDS-SUBQUOTIENT", "AX-HD-SUPPORT",
        "AX-LINKED-PRODUCT", "AX-STANDARD-MODULE-EXPONENTS",
        "AX-REGULAR-JACQUET-REGIONS"}) {
    EXPECT_TRUE(ids.contains(id)) << id;
  }
}

}  // namespace
}  // namespace jacquet
