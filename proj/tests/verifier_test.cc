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

#include "jacquet/verifier.h"

#include <set>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"
#include "jacquet/syntax.h"
#include "oracles.h"

namespace jacquet {
namespace {

using oracle::E;
using oracle::Half;
using oracle::Seg;

struct CaseExample {
  std::string alpha;
  std::int64_t n;
  std::string gamma;
  CaseKind kind;
};

void PrintTo(const CaseExample& c, std::ostream* os) {
  *os << "alpha=" << c.alpha << " " << c.gamma;
}

class CaseExampleTest : public ::testing::TestWithParam<CaseExample> {};

TEST_P(CaseExampleTest, ProducesPassingReport) {
  const CaseExample& c = GetParam();
  const CuspidalContext ctx(Exponent::Parse(c.alpha));
  const SubquotientParam gamma = ParseParam(c.gamma, ctx);
  ASSERT_EQ(LadderLength(gamma), c.n);
  ASSERT_EQ(ClassifyCase(gamma), c.kind);

  const VerificationReport r = Verify(gamma, ctx);
  EXPECT_TRUE(r.Pass()) << RenderText(r);
  EXPECT_EQ(r.kind, c.kind);
  ASSERT_EQ(r.exhibits.size(), static_cast<std::size_t>(kRequiredExhibits));
  std::set<std::string> names;
  for (const Exhibit& e : r.exhibits) {
    names.insert(e.param);
    EXPECT_GE(e.coefficient, e.required) << e.param;
    EXPECT_FALSE(e.axioms.empty()) << e.param;
  }
  EXPECT_EQ(names.size(), r.exhibits.size());
  EXPECT_LE(r.mult_bound, kMultiplicityCeiling);
  for (const CheckEntry& check : r.checks) {
    EXPECT_FALSE(check.anchor.empty()) << check.name;
    EXPECT_TRUE(check.pass) << check.name << ": " << check.detail;
  }
  for (const std::string& id : r.axioms_used) {
    bool known = false;
    for (const Axiom& a : AxiomTable()) known = known || a.id == id;
    EXPECT_TRUE(known) << id;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, CaseExampleTest,
    ::testing::Values(CaseExample{"1", 1, "L([1,2];sigma)", CaseKind::kA},
                      CaseExample{"1/2", 1, "L([1/2,3/2];sigma)", CaseKind::kA},
                      CaseExample{"1", 2, "L([1,3];sigma)", CaseKind::kA},
                      CaseExample{"1", 2, "L([2,3],[1];sigma)", CaseKind::kB},
                      CaseExample{"1/2", 2, "L([3/2,5/2],[1/2];sigma)", CaseKind::kB},
                      CaseExample{"1", 3, "L([2,4],[1];sigma)", CaseKind::kB},
                      CaseExample{"1", 1, "L([2];d([1];sigma))", CaseKind::kC},
                      CaseExample{"1", 2, "L([3],[2];d([1];sigma))", CaseKind::kC},
                      CaseExample{"1/2", 1, "L([3/2];d([1/2];sigma))", CaseKind::kC}));

TEST(VerifierTest, CaseAShape) {
  const CuspidalContext ctx(E(1));
  const VerificationReport r = VerifyCaseA(SubquotientParam{{Seg(1, 2)}, Segment()}, ctx);
  EXPECT_EQ(r.delta_u, Seg(-1, 1));
  EXPECT_EQ(r.mult_bound, 4);
  EXPECT_EQ(r.exhibits[0].param, "L([1,2];tau([-1,1],+))");
  EXPECT_EQ(r.exhibits[2].param, "L([1],[-1,2];sigma)");
  EXPECT_EQ(r.exhibits[3].param, "L([1];dpm([-1,2],+))");
}

TEST(VerifierTest, CaseBUsesWiderSymmetricSegment) {
  const CuspidalContext ctx(E(1));
  const VerificationReport r =
      VerifyCaseB(SubquotientParam{{Seg(2, 3), Seg(1, 1)}, Segment()}, ctx);
  EXPECT_EQ(r.delta_u, Seg(-2, 2));
  EXPECT_TRUE(r.Pass());
}

TEST(VerifierTest, CaseCRecordsTheDual) {
  const CuspidalContext ctx(E(1));
  const VerificationReport r =
      VerifyCaseC(SubquotientParam{{Seg(2, 2)}, Seg(1, 1)}, ctx);
  ASSERT_TRUE(r.dual_gamma.has_value());
  EXPECT_EQ(*r.dual_gamma, (SubquotientParam{{Seg(1, 2)}, Segment()}));
  EXPECT_EQ(r.dual_kind, CaseKind::kA);
  EXPECT_TRUE(r.Pass());
}

TEST(VerifierTest, RejectsMismatchedCases) {
  const CuspidalContext ctx(E(1));
  const SubquotientParam a{{Seg(1, 2)}, Segment()};
  const SubquotientParam c{{Seg(2, 2)}, Seg(1, 1)};
  EXPECT_THROW(VerifyCaseB(a, ctx), std::invalid_argument);
  EXPECT_THROW(VerifyCaseC(a, ctx), std::invalid_argument);
  EXPECT_THROW(VerifyCaseA(c, ctx), std::invalid_argument);
  EXPECT_THROW(Verify(SubquotientParam{{}, Seg(1, 2)}, ctx), std::invalid_argument);
}

TEST(SweepTest, LadderOfLengthOne) {
  const SweepBlock b = SweepOne(CuspidalContext(E(1)), 1, 1);
  EXPECT_EQ(b.parameter_count, 4u);
  EXPECT_EQ(b.exceptions.size(), 2u);
  EXPECT_EQ(b.reports.size(), 2u);
  EXPECT_TRUE(b.Pass());
  EXPECT_EQ(BlockFileStem(b), "alpha-1-n-1");
  EXPECT_EQ(BlockFileStem(SweepOne(CuspidalContext(Half(3)), 1, 1)), "alpha-3_2-n-1");
}

TEST(SweepTest, OutputIndependentOfThreadCount) {
  const CuspidalContext ctx(Half(1));
  const std::string one = ToJson(SweepOne(ctx, 2, 1)).dump();
  const std::string many = ToJson(SweepOne(ctx, 2, 3)).dump();
  EXPECT_EQ(one, many);
  EXPECT_EQ(RenderText(SweepOne(ctx, 2, 1)), RenderText(SweepOne(ctx, 2, 4)));
}

TEST(SweepTest, EmptyInputs) {
  EXPECT_TRUE(Sweep({E(1)}, {}, 1).empty());
  EXPECT_TRUE(Sweep({}, {1, 2}, 1).empty());
  EXPECT_EQ(Sweep({Half(1), E(1)}, {1}, 1).size(), 2u);
}

TEST(ReportTest, JsonFields) {
  const CuspidalContext ctx(E(1));
  const auto j = ToJson(Verify(SubquotientParam{{Seg(1, 2)}, Segment()}, ctx));
  EXPECT_EQ(j["gamma"], "L([1,2];sigma)");
  EXPECT_EQ(j["case"], "A");
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["exhibits"].size(), 5u);
  EXPECT_TRUE(j.contains("checks"));
  EXPECT_TRUE(j.contains("axioms_used"));

  const auto block = ToJson(SweepOne(ctx, 1, 1));
  EXPECT_EQ(block["summary"]["A"], 1);
  EXPECT_EQ(block["summary"]["C"], 1);
  EXPECT_EQ(block["verdict"], "PASS");
}

}  // namespace
}  // namespace jacquet
