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

#include "jacquet/gl_hopf.h"

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "jacquet/regular_regions.h"
#include "oracles.h"

namespace jacquet {
namespace {

using oracle::E;
using oracle::Half;
using oracle::Seg;

std::vector<Segment> SegmentsIn(std::int64_t lo, std::int64_t hi) {
  std::vector<Segment> out;
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t b = a; b <= hi; ++b) out.push_back(Seg(a, b));
  }
  return out;
}

// Multisegments of total degree <= max_degree built from `segs`.
std::vector<Multisegment> MultisegmentsUpTo(const std::vector<Segment>& segs,
                                            std::int64_t max_degree) {
  std::set<Multisegment> seen{Multisegment{}};
  std::vector<Multisegment> frontier{Multisegment{}};
  while (!frontier.empty()) {
    std::vector<Multisegment> next;
    for (const Multisegment& d : frontier) {
      for (const Segment& s : segs) {
        Multisegment e = d + Multisegment{s};
        if (e.Degree() <= max_degree && seen.insert(e).second) next.push_back(e);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

using Triple = std::tuple<Multisegment, Multisegment, Multisegment>;

std::map<Triple, Coefficient> LeftCoassoc(const GLTensorElement& x) {
  std::map<Triple, Coefficient> out;
  for (const auto& [uv, c] : x) {
    for (const auto& [ab, c2] : Comultiply(GLBasis(uv.first))) {
      out[{ab.first, ab.second, uv.second}] += c * c2;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Triple, Coefficient> RightCoassoc(const GLTensorElement& x) {
  std::map<Triple, Coefficient> out;
  for (const auto& [uv, c] : x) {
    for (const auto& [ab, c2] : Comultiply(GLBasis(uv.second))) {
      out[{uv.first, ab.first, ab.second}] += c * c2;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TEST(ComultiplyTest, SegmentMatchesDirectFormula) {
  for (const Segment& s : SegmentsIn(-3, 3)) {
    const auto expected = oracle::SegmentCoproduct(s);
    const GLTensorElement got = ComultiplyDelta(s);
    ASSERT_EQ(got.size(), expected.size()) << s.ToString();
    for (const auto& [k, c] : expected) EXPECT_EQ(got.Coeff(k), c) << s.ToString();
  }
}

TEST(ComultiplyTest, HalfIntegralSegment) {
  const Segment s(Half(-1), Half(3));
  EXPECT_EQ(ComultiplyDelta(s).size(), 4u);
  EXPECT_EQ(ComultiplyDelta(s).Coeff({Multisegment{Segment(Half(1), Half(3))},
                                      Multisegment{Segment(Half(-1), Half(-1))}}),
            1);
}

TEST(ComultiplyTest, CoassociativeAndCounital) {
  const auto segs = SegmentsIn(-2, 2);
  for (const Multisegment& d : MultisegmentsUpTo(segs, 4)) {
    const GLTensorElement m = Comultiply(GLBasis(d));
    EXPECT_EQ(LeftCoassoc(m), RightCoassoc(m)) << d.ToString();
    EXPECT_EQ(m.Coeff({Multisegment{}, d}), 1) << d.ToString();
    EXPECT_EQ(m.Coeff({d, Multisegment{}}), 1) << d.ToString();
    for (const auto& [uv, c] : m) {
      EXPECT_EQ(uv.first.Degree() + uv.second.Degree(), d.Degree());
    }
  }
}

TEST(ComultiplyTest, Multiplicative) {
  const auto segs = SegmentsIn(-2, 2);
  for (const Segment& a : segs) {
    for (const Segment& b : segs) {
      const GLTensorElement lhs = Comultiply(GLMul(GLDelta(a), GLDelta(b)));
      const GLTensorElement rhs = TensorMul(ComultiplyDelta(a), ComultiplyDelta(b));
      EXPECT_EQ(lhs, rhs) << a.ToString() << " x " << b.ToString();
    }
  }
}

// Jacquet restriction is transitive: the degree-k part of m*(x), with its
// two sides expanded into words and concatenated, is the word model of x.
TEST(ComultiplyTest, ConcatenatedSidesRecoverWordModel) {
  for (const Multisegment& d : MultisegmentsUpTo(SegmentsIn(-1, 2), 4)) {
    const oracle::WordCounts whole = oracle::StandardWords(d);
    for (std::int64_t k = 0; k <= d.Degree(); ++k) {
      oracle::WordCounts glued;
      for (const auto& [uv, c] : Comultiply(GLBasis(d))) {
        if (uv.first.Degree() != k) continue;
        for (const auto& [wu, cu] : oracle::StandardWords(uv.first)) {
          for (const auto& [wv, cv] : oracle::StandardWords(uv.second)) {
            Word w = wu;
            w.insert(w.end(), wv.begin(), wv.end());
            glued[w] += static_cast<std::int64_t>(c) * cu * cv;
          }
        }
      }
      std::erase_if(glued, [](const auto& kv) { return kv.second == 0; });
      EXPECT_EQ(glued, whole) << d.ToString() << " k=" << k;
    }
  }
}

TEST(ComultiplyTest, ZelevinskySegmentCoproductAgrees) {
  for (const Segment& s : SegmentsIn(-1, 2)) {
    EXPECT_EQ(ComultiplyZelevinskySegment(s), Comultiply(ExpandZelevinskySegment(s)))
        << s.ToString();
  }
}

TEST(WordModelTest, MatchesBruteForceShuffle) {
  for (const Multisegment& d : MultisegmentsUpTo(SegmentsIn(-1, 2), 5)) {
    EXPECT_EQ(oracle::ToCounts(WordModel(d)), oracle::StandardWords(d)) << d.ToString();
  }
}

TEST(WordModelTest, ShuffleMatchesOracle) {
  const WordSum a(Word{E(1), E(0)});
  const WordSum b(Word{E(0), E(2)}, 3);
  const oracle::WordCounts expected =
      oracle::Shuffle({{Word{E(1), E(0)}, 1}}, {{Word{E(0), E(2)}, 3}});
  EXPECT_EQ(oracle::ToCounts(Shuffle(a, b)), expected);
}

TEST(ZelevinskySegmentTest, MatchesAlternatingSignFormula) {
  for (std::int64_t len = 1; len <= 5; ++len) {
    const Segment s = Seg(-1, -1 + len - 1);
    const GLElement got = ExpandZelevinskySegment(s);
    const auto expected = oracle::ZelevinskyBySigns(s);
    ASSERT_EQ(got.size(), expected.size()) << s.ToString();
    for (const auto& [d, c] : expected) EXPECT_EQ(got.Coeff(d), c) << d.ToString();
  }
}

TEST(ZelevinskySegmentTest, ZeroToTwo) {
  const GLElement s = ExpandZelevinskySegment(Seg(0, 2));
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.Coeff(Multisegment{Seg(0, 0), Seg(1, 1), Seg(2, 2)}), 1);
  EXPECT_EQ(s.Coeff(Multisegment{Seg(0, 0), Seg(1, 2)}), -1);
  EXPECT_EQ(s.Coeff(Multisegment{Seg(0, 1), Seg(2, 2)}), -1);
  EXPECT_EQ(s.Coeff(Multisegment{Seg(0, 2)}), 1);
}

TEST(ZelevinskySegmentTest, RefinementsCount) {
  EXPECT_EQ(ConsecutiveRefinements(Seg(0, 3)).size(), 8u);
  EXPECT_EQ(ConsecutiveRefinements(Seg(0, 0)).size(), 1u);
}

TEST(InvolutionTest, InvolutiveOnSmallBasis) {
  for (const Multisegment& d : MultisegmentsUpTo(SegmentsIn(-2, 2), 4)) {
    EXPECT_EQ(Involution(Involution(GLBasis(d))), GLBasis(d)) << d.ToString();
  }
}

TEST(InvolutionTest, SegmentGoesToAscendingWord) {
  for (const Segment& s : SegmentsIn(-2, 2)) {
    EXPECT_EQ(WordModel(Involution(GLDelta(s))), WordSum(s.AscendingWord()))
        << s.ToString();
  }
}

TEST(InvolutionTest, RingHomomorphism) {
  const GLElement x = GLDelta(Seg(0, 1));
  const GLElement y = GLDelta(Seg(1, 2));
  EXPECT_EQ(Involution(GLMul(x, y)), GLMul(Involution(x), Involution(y)));
  EXPECT_EQ(ZelevinskyProduct({Seg(0, 1), Seg(1, 2)}), Involution(GLMul(x, y)));
}

TEST(TwistedComultiplyTest, ClosedFormAgreesOnAllSmallSegments) {
  for (std::int64_t lo = -6; lo <= 6; ++lo) {
    for (std::int64_t hi = lo; hi <= 6; hi += 2) {
      const Segment s(Exponent::FromTwice(lo), Exponent::FromTwice(hi));
      EXPECT_EQ(TwistedComultiplyClosedForm(s), TwistedComultiply(GLDelta(s)))
          << s.ToString();
    }
  }
}

TEST(TwistedComultiplyTest, SymmetricSegmentAppearsTwice) {
  const GLTensorElement m = TwistedComultiply(GLDelta(Seg(-1, 1)));
  EXPECT_EQ(m.Coeff({Multisegment{Seg(-1, 1)}, Multisegment{}}), 2);
  EXPECT_EQ(m.Coeff({Multisegment{Seg(0, 1)}, Multisegment{Seg(-1, -1)}}), 1);
  EXPECT_EQ(m.Coeff({Multisegment{Seg(0, 1)}, Multisegment{Seg(1, 1)}}), 1);
  EXPECT_EQ(m.Coeff({Multisegment{}, Multisegment{Seg(-1, 1)}}), 1);
}

TEST(TwistedComultiplyTest, Multiplicative) {
  const GLElement x = GLDelta(Seg(0, 1));
  const GLElement y = GLDelta(Seg(1, 1));
  EXPECT_EQ(TwistedComultiply(GLMul(x, y)),
            TensorMul(TwistedComultiply(x), TwistedComultiply(y)));
}

TEST(TwistedComultiplyTest, GLPartCollectsRightUnitTerms) {
  const GLElement x = GLDelta(Seg(1, 1));
  EXPECT_EQ(TwistedGLPart(x), GLDelta(Seg(1, 1)) + GLDelta(Seg(-1, -1)));
}

TEST(DerivativeTest, SegmentsLoseTheirTop) {
  EXPECT_EQ(Derivative(GLDelta(Seg(0, 1))), GLDelta(Seg(0, 1)) + GLDelta(Seg(0, 0)));
  const GLElement x = GLMul(GLDelta(Seg(0, 1)), GLDelta(Seg(3, 3)));
  EXPECT_EQ(HighestDerivative(x), GLDelta(Seg(0, 0)));
  EXPECT_TRUE(HighestDerivative(GLElement()).IsZero());
}

TEST(DerivativeTest, ZelevinskySideLosesTop) {
  const GLElement s01 = ExpandZelevinskySegment(Seg(0, 1));
  EXPECT_EQ(ZelevinskyDerivative(s01), s01 + ExpandZelevinskySegment(Seg(0, 0)));
  EXPECT_EQ(ZelevinskyHighestDerivative(s01), GLDelta(Seg(0, 0)));
}

TEST(GLTest, ContragredientAndGrading) {
  EXPECT_EQ(GLContragredient(GLDelta(Seg(0, 1))), GLDelta(Seg(-1, 0)));
  const GLElement x = GLDelta(Seg(0, 1)) + 3 * GLDelta(Seg(2, 2));
  EXPECT_EQ(GradedComponent(x, 1), 3 * GLDelta(Seg(2, 2)));
  EXPECT_EQ(GLMul(GLOne(), x), x);
}

TEST(GLTest, Rendering) {
  EXPECT_EQ(ToString(2 * GLDelta(Seg(0, 1)) - GLOne()), "-1 + 2*{[0,1]}");
  EXPECT_EQ(ToString(ComultiplyDelta(Seg(0, 0))), "1 (x) {[0,0]} + {[0,0]} (x) 1");
  EXPECT_EQ(ToString(GLElement()), "0");
}

TEST(MoeglinWaldspurgerTest, SmallCases) {
  EXPECT_EQ(MoeglinWaldspurgerDual(Multisegment{Seg(0, 1)}),
            (Multisegment{Seg(0, 0), Seg(1, 1)}));
  EXPECT_EQ(MoeglinWaldspurgerDual(Multisegment{Seg(0, 0), Seg(1, 1)}),
            (Multisegment{Seg(0, 1)}));
  EXPECT_EQ(MoeglinWaldspurgerDual(Multisegment{Seg(0, 0), Seg(0, 0)}),
            (Multisegment{Seg(0, 0), Seg(0, 0)}));
}

TEST(MoeglinWaldspurgerTest, Involutive) {
  for (const Multisegment& d : MultisegmentsUpTo(SegmentsIn(-2, 2), 4)) {
    EXPECT_EQ(MoeglinWaldspurgerDual(MoeglinWaldspurgerDual(d)), d) << d.ToString();
  }
}

// In the regular case Z(a) = L(a^t), so the two word regions must coincide.
TEST(MoeglinWaldspurgerTest, MatchesRegularRegions) {
  for (const Multisegment& d : MultisegmentsUpTo(SegmentsIn(-1, 2), 4)) {
    std::set<Exponent> letters;
    bool regular = true;
    for (const Exponent e : d.Support()) regular = regular && letters.insert(e).second;
    if (!regular) continue;
    EXPECT_EQ(RegularZWords(d), RegularLWords(MoeglinWaldspurgerDual(d))) << d.ToString();
  }
}

}  // namespace
}  // namespace jacquet
