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

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jacquet/regular_regions.h"

namespace jacquet {
namespace {

constexpr char kScopeNote[] =
    "combinatorial inputs verified, conditional on the listed axioms";

Word Cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Segment> Cat(std::vector<Segment> a, const std::vector<Segment>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Exponent> AbsSupport(const std::vector<Segment>& segs) {
  std::vector<Exponent> out;
  for (const Segment& s : segs) {
    for (const Exponent e : s.AscendingWord()) out.push_back(e.Abs());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Segment> TemperedSupport(const TemperedSymbol& t,
                                     const CuspidalContext& ctx) {
  switch (t.kind()) {
    case TemperedKind::kCuspidal:
      return {};
    case TemperedKind::kGenSteinberg:
    case TemperedKind::kDualSteinberg:
      return {Segment(ctx.alpha(), ctx.alpha().Step(t.k()))};
    default:
      return {t.segment()};
  }
}

std::vector<Segment> DatumSupport(const LanglandsDatum& l,
                                  const CuspidalContext& ctx) {
  return Cat(l.gl_part(), TemperedSupport(l.temp(), ctx));
}

std::string Describe(const Coefficient& c) { return c.str(); }

class ReportBuilder {
 public:
  ReportBuilder(const SubquotientParam& gamma, CaseKind kind,
                const CuspidalContext& ctx)
      : ctx_(ctx) {
    r_.alpha = ctx.alpha();
    r_.n = LadderLength(gamma);
    r_.gamma = gamma;
    r_.kind = kind;
  }

  VerificationReport& report() { return r_; }

  void Check(std::string name, std::string anchor, bool pass, std::string detail) {
    r_.checks.push_back({std::move(name), std::move(anchor), pass, std::move(detail)});
  }

  void AddExhibit(const LanglandsDatum& datum, Word word, std::int64_t required,
                  std::vector<std::string> axioms, const ClassicalElement& x) {
    Exhibit e;
    e.param = datum.ToString();
    e.word = std::move(word);
    e.required = required;
    e.coefficient = ClassicalWordCoefficient(e.word, x, ctx_);
    e.axioms = std::move(axioms);
    r_.exhibits.push_back(std::move(e));
    supports_.push_back(DatumSupport(datum, ctx_));
  }

  // Checks shared by every case: exhibit count and distinctness, detection
  // coefficients, support bookkeeping against x, and the multiplicity bound.
  void CommonChecks(const std::vector<Segment>& x_support) {
    std::set<std::string> names;
    for (const Exhibit& e : r_.exhibits) names.insert(e.param);
    std::set<std::string> excluded;
    for (const SubquotientParam& p : SubquotientEnumerate(r_.n, ctx_)) {
      if (ClassifyCase(p) == CaseKind::kException) {
        excluded.insert(ToDatum(p, ctx_).ToString());
        excluded.insert(p.ToString());
      }
    }
    bool avoids = true;
    for (const std::string& s : names) avoids = avoids && !excluded.contains(s);
    Check("five-distinct-exhibits", "length-at-least-five",
          r_.exhibits.size() == kRequiredExhibits && names.size() == kRequiredExhibits &&
              avoids,
          std::to_string(names.size()) + " distinct exhibits");

    bool coeffs = true;
    std::string detail;
    for (const Exhibit& e : r_.exhibits) {
      coeffs = coeffs && e.coefficient >= e.required;
      if (!detail.empty()) detail += "; ";
      detail += e.param + ": " + Describe(e.coefficient) + " >= " +
                std::to_string(e.required);
    }
    Check("exhibit-detection-coefficients", "detection-word-positivity", coeffs,
          detail);

    bool support = true;
    const auto want = AbsSupport(x_support);
    for (const auto& s : supports_) support = support && AbsSupport(s) == want;
    Check("support-bookkeeping", "cuspidal-support-conservation", support,
          "absolute supports of all exhibits match the induced class");

    Check("multiplicity-at-most-four", "multiplicity-bound",
          r_.mult_bound <= kMultiplicityCeiling,
          "coefficient " + Describe(r_.mult_bound) + " <= " +
              std::to_string(kMultiplicityCeiling));
  }

  VerificationReport Finish(std::vector<std::string> case_axioms) {
    std::set<std::string> axioms(case_axioms.begin(), case_axioms.end());
    for (const Exhibit& e : r_.exhibits) axioms.insert(e.axioms.begin(), e.axioms.end());
    r_.axioms_used.assign(axioms.begin(), axioms.end());
    return std::move(r_);
  }

 private:
  const CuspidalContext& ctx_;
  VerificationReport r_;
  std::vector<std::vector<Segment>> supports_;
};

// The signed words of L(segs) x| sigma, computed from the GL region, against
// the sum of the two regions on the right-hand side.
bool RegionIdentityHolds(const std::vector<Segment>& segs,
                         const SubquotientParam& first,
                         const SubquotientParam& second,
                         const CuspidalContext& ctx, std::string* detail) {
  const std::int64_t n = LadderLength(first);
  const ClassicalWordSum lhs = Classicalize(RegularLWords(Multisegment(segs)));
  const ClassicalWordSum rhs = RegionWords(ParamRegion(first, ctx), n, ctx) +
                               RegionWords(ParamRegion(second, ctx), n, ctx);
  *detail = "L(" + Multisegment(segs).ToString() + ") x| sigma = " +
            first.ToString() + " + " + second.ToString() + " on " +
            std::to_string(lhs.size()) + " words";
  return lhs == rhs;
}

std::vector<std::string> PairAxioms(const char* pair_axiom) {
  return {pair_axiom, "AX-LANGLANDS-SUBQUOTIENT", "AX-STANDARD-MODULE-EXPONENTS"};
}

// Bound via mu* splitting, computed only while the twisted coproduct stays
// small; nullopt otherwise.
std::optional<Coefficient> SplittingBound(const Word& left, const Word& right,
                                          const ClassicalElement& x,
                                          const CuspidalContext& ctx) {
  std::int64_t size = 1;
  for (const auto& [b, c] : x) {
    for (const Segment& s : b.gl.segments()) size *= s.Cardinality() + 1;
  }
  if (size > 4096) return std::nullopt;
  return TensorMultUpperBoundBySplitting(left, right, x, ctx);
}

void AddSplittingCheck(ReportBuilder& b, const Word& left, const Word& right,
                       const ClassicalElement& x, const CuspidalContext& ctx) {
  const auto split = SplittingBound(left, right, x, ctx);
  if (!split) return;
  b.Check("splitting-route-agreement", "jacquet-transitivity",
          *split == b.report().mult_bound,
          "mu* splitting gives " + Describe(*split));
}

}  // namespace

bool VerificationReport::Pass() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckEntry& c) { return c.pass; });
}

bool SweepBlock::Pass() const {
  return exceptions.size() == 2 &&
         std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.Pass(); });
}

VerificationReport VerifyCaseA(const SubquotientParam& gamma,
                               const CuspidalContext& ctx) {
  if (ClassifyCase(gamma) != CaseKind::kA) {
    throw std::invalid_argument(gamma.ToString() + " is not a case A parameter");
  }
  ReportBuilder b(gamma, CaseKind::kA, ctx);
  const Exponent alpha = ctx.alpha();
  const Segment dk = gamma.segs.back();
  const std::vector<Segment> a(gamma.segs.begin(), gamma.segs.end() - 1);
  const Segment du(-alpha, alpha);
  const Segment big(-alpha, dk.hi());
  const Segment point = Segment::Point(alpha);
  b.report().delta_u = du;
  b.report().pi = "delta(" + du.ToString() + ")";

  const ClassicalElement x =
      ClassicalBasisElement(Multisegment(Cat(gamma.segs, {du})), TemperedSymbol::Cuspidal());
  const Word det = DetectionWord(ToDatum(gamma, ctx), ctx);
  b.report().mult_bound = TensorMultUpperBound(du.DescendingWord(), det, x, ctx);

  for (PMSign s : {PMSign::kPlus, PMSign::kMinus}) {
    b.AddExhibit(LanglandsDatum(gamma.segs, TemperedSymbol::TauPM(du, s)),
                 Cat(det, du.DescendingWord()), 2, PairAxioms("AX-TAU-REDUCIBILITY"), x);
  }
  const LanglandsDatum linked(Cat(a, {big, point}), TemperedSymbol::Cuspidal());
  b.AddExhibit(linked, DetectionWord(linked, ctx), 1,
               {"AX-LINKED-PRODUCT", "AX-LANGLANDS-SUBQUOTIENT",
                "AX-STANDARD-MODULE-EXPONENTS"},
               x);
  const Word det_a_point =
      DetectionWord(LanglandsDatum(Cat(a, {point}), TemperedSymbol::Cuspidal()), ctx);
  for (PMSign s : {PMSign::kPlus, PMSign::kMinus}) {
    b.AddExhibit(LanglandsDatum(Cat(a, {point}), TemperedSymbol::DeltaPM(big, s)),
                 Cat(det_a_point, big.DescendingWord()), 2, PairAxioms("AX-DELTA-PM"), x);
  }

  b.CommonChecks(Cat(gamma.segs, {du}));
  const Coefficient twice = TwistedComultiply(GLDelta(du)).Coeff({Multisegment{du}, Multisegment{}});
  b.Check("symmetric-segment-coefficient-two", "twisted-coproduct-multiplicity-two",
          twice == 2, "coefficient of {D_u} (x) 1 in M*(delta(D_u)) is " + Describe(twice));
  std::string detail;
  const bool identity = RegionIdentityHolds(gamma.segs, gamma, SubquotientParam{a, dk}, ctx, &detail);
  b.Check("two-constituent-reduction", "langlands-quotient-over-sigma", identity, detail);
  AddSplittingCheck(b, du.DescendingWord(), det, x, ctx);
  return b.Finish({"AX-REGULAR-JACQUET-REGIONS"});
}

VerificationReport VerifyCaseB(const SubquotientParam& gamma,
                               const CuspidalContext& ctx) {
  if (ClassifyCase(gamma) != CaseKind::kB) {
    throw std::invalid_argument(gamma.ToString() + " is not a case B parameter");
  }
  ReportBuilder b(gamma, CaseKind::kB, ctx);
  const Exponent alpha = ctx.alpha();
  const auto& segs = gamma.segs;
  const std::int64_t k = static_cast<std::int64_t>(segs.size());
  std::int64_t i0 = k - 1;
  while (i0 >= 0 && segs[i0].Cardinality() == 1) --i0;
  // alpha' = alpha + k - k0 with k0 = i0 + 1 counted from one.
  const Exponent alpha_p = alpha.Step(k - 1 - i0);
  const Segment dk0 = segs[i0];
  const std::vector<Segment> a(segs.begin(), segs.begin() + i0);
  const std::vector<Segment> tail_points(segs.begin() + i0 + 1, segs.end());
  const Segment du(-alpha_p, alpha_p);
  const Segment big(-alpha_p, dk0.hi());
  const Segment point = Segment::Point(alpha_p);
  b.report().delta_u = du;
  b.report().pi = "delta(" + du.ToString() + ")";

  bool shape = i0 + 1 < k && dk0.lo() == alpha_p && alpha_p < dk0.hi();
  for (std::size_t j = 0; j < tail_points.size(); ++j) {
    shape = shape && tail_points[j] == Segment::Point(alpha_p.Step(-1 - static_cast<std::int64_t>(j)));
  }
  b.Check("k0-precondition", "k0-below-k", shape,
          "k0 = " + std::to_string(i0 + 1) + ", k = " + std::to_string(k) +
              ", alpha' = " + alpha_p.ToString() + " < c = " + dk0.hi().ToString());

  const ClassicalElement x =
      ClassicalBasisElement(Multisegment(Cat(segs, {du})), TemperedSymbol::Cuspidal());
  const Word det = DetectionWord(ToDatum(gamma, ctx), ctx);
  b.report().mult_bound = TensorMultUpperBound(du.DescendingWord(), det, x, ctx);

  // gamma <= lambda(a, [alpha'+1, c]) x| L(nu^alpha, ..., nu^alpha'; sigma).
  const std::int64_t m = (alpha_p - alpha).twice() / 2;
  const ClassicalElement refined = ClassicalBasisElement(
      Multisegment(Cat(a, {du, Segment(alpha_p.Step(1), dk0.hi())})),
      TemperedSymbol::DualSteinberg(m));
  const Coefficient refined_bound =
      TensorMultUpperBound(du.DescendingWord(), det, refined, ctx);
  b.report().other_bounds.push_back({"refined-dual-steinberg", refined_bound});
  const auto dual_terms = MuStarDualSteinberg(m, ctx);
  b.Check("refined-bound", "dual-steinberg-jacquet-formula",
          refined_bound <= kMultiplicityCeiling &&
              static_cast<std::int64_t>(dual_terms.size()) == m + 2,
          "coefficient " + Describe(refined_bound) + " against " +
              ToString(refined) + "; mu* of dst(" + std::to_string(m) + ") has " +
              std::to_string(dual_terms.size()) + " terms");

  for (PMSign s : {PMSign::kPlus, PMSign::kMinus}) {
    b.AddExhibit(LanglandsDatum(segs, TemperedSymbol::TauPM(du, s)),
                 Cat(det, du.DescendingWord()), 2, PairAxioms("AX-TAU-REDUCIBILITY"), x);
  }
  const LanglandsDatum linked(Cat(Cat(a, {big}), Cat(tail_points, {point})),
                              TemperedSymbol::Cuspidal());
  b.AddExhibit(linked, DetectionWord(linked, ctx), 1,
               {"AX-HD-SUPPORT", "AX-LANGLANDS-SUBQUOTIENT",
                "AX-STANDARD-MODULE-EXPONENTS"},
               x);
  const std::vector<Segment> a_point_b = Cat(Cat(a, {point}), tail_points);
  const Word det_apb =
      DetectionWord(LanglandsDatum(a_point_b, TemperedSymbol::Cuspidal()), ctx);
  for (PMSign s : {PMSign::kPlus, PMSign::kMinus}) {
    b.AddExhibit(LanglandsDatum(a_point_b, TemperedSymbol::DeltaPM(big, s)),
                 Cat(det_apb, big.DescendingWord()), 2, PairAxioms("AX-DELTA-PM"), x);
  }

  b.CommonChecks(Cat(segs, {du}));

  // Zelevinsky side: the highest derivative of s(D_u) x Z(a, D_k0, b) is
  // s(D_u^-) x Z(a^-, D_k0^-), which must contain Z(a^-, D^-) once.
  std::vector<Segment> minus_factors{SegMinus(du), SegMinus(dk0)};
  std::vector<Segment> predicted{SegMinus(big)};
  for (const Segment& s : a) {
    minus_factors.push_back(SegMinus(s));
    predicted.push_back(SegMinus(s));
  }
  const Multisegment predicted_ms(predicted);
  const GLElement hd = ZelevinskyProduct(minus_factors);
  const Coefficient hd_coeff = GLWordCoefficient(RegularZWord(predicted_ms), hd);
  const Multisegment candidate(Cat(Cat(a, {big}), Cat(tail_points, {point})));
  std::vector<Segment> candidate_minus;
  for (const Segment& s : candidate.segments()) candidate_minus.push_back(SegMinus(s));
  const bool support_ok =
      AbsSupport(candidate.segments()) == AbsSupport(Cat(segs, {du})) &&
      Multisegment(candidate_minus) == predicted_ms;
  b.Check("highest-derivative-identification", "support-and-derivative-determine",
          hd_coeff == 1 && support_ok,
          "Z(" + predicted_ms.ToString() + ") occurs " + Describe(hd_coeff) +
              " time(s) in the highest derivative");

  std::vector<Segment> lower_points;
  for (Exponent e = alpha_p.Step(-1); e > alpha; e = e.Step(-1)) {
    lower_points.push_back(Segment::Point(e));
  }
  const SubquotientParam second{Cat(Cat(a, {dk0}), lower_points), Segment::Point(alpha)};
  std::string detail;
  const bool identity = RegionIdentityHolds(segs, gamma, second, ctx, &detail);
  b.Check("two-constituent-reduction", "langlands-quotient-over-sigma", identity, detail);
  AddSplittingCheck(b, du.DescendingWord(), det, x, ctx);
  return b.Finish({"AX-REGULAR-JACQUET-REGIONS"});
}

VerificationReport VerifyCaseC(const SubquotientParam& gamma,
                               const CuspidalContext& ctx) {
  if (ClassifyCase(gamma) != CaseKind::kC) {
    throw std::invalid_argument(gamma.ToString() + " is not a case C parameter");
  }
  ReportBuilder b(gamma, CaseKind::kC, ctx);
  const SubquotientParam dual = AubertDual(gamma, ctx);
  const CaseKind dual_kind = ClassifyCase(dual);
  b.report().dual_gamma = dual;
  b.report().dual_kind = dual_kind;
  const bool dual_ok = dual_kind == CaseKind::kA || dual_kind == CaseKind::kB;
  Region complement = ParamRegion(dual, ctx);
  complement.flip();
  b.Check("aubert-dual-pairing", "dual-has-empty-tail",
          dual_ok && dual.tail.empty() && complement == ParamRegion(gamma, ctx),
          "dual " + dual.ToString() + " is case " + ToString(dual_kind));
  if (!dual_ok) return b.Finish({"AX-REGULAR-JACQUET-REGIONS"});

  const VerificationReport dual_report =
      dual_kind == CaseKind::kA ? VerifyCaseA(dual, ctx) : VerifyCaseB(dual, ctx);
  const Segment du = dual_report.delta_u;
  b.report().delta_u = du;
  b.report().pi = "t(delta(" + du.ToString() + "))";
  b.Check("dual-report-passes", "aubert-transport", dual_report.Pass(),
          "report for " + dual.ToString() + (dual_report.Pass() ? " passes" : " fails"));
  b.Check("contragredient-invariance", "symmetric-segment-self-dual",
          SegContragredient(du) == du, du.ToString() + " is its own contragredient");
  b.report().other_bounds.push_back({"transported", dual_report.mult_bound});

  // s(D_u) x lambda(segs) x| delta(tail; sigma) bounds pi x| gamma.
  const ClassicalElement x =
      Rtimes(ExpandZelevinskySegment(du), StandardModule(gamma, ctx));
  const Word det = DetectionWord(ToDatum(gamma, ctx), ctx);
  b.report().mult_bound = TensorMultUpperBound(du.AscendingWord(), det, x, ctx);

  for (const Exhibit& e : dual_report.exhibits) {
    Exhibit t;
    t.param = "t(" + e.param + ")";
    t.word = Negate(e.word);
    t.required = e.required;
    t.coefficient = ClassicalWordCoefficient(t.word, x, ctx);
    t.axioms = e.axioms;
    t.axioms.push_back("AX-REGULAR-JACQUET-REGIONS");
    b.report().exhibits.push_back(std::move(t));
  }
  std::set<std::string> names;
  for (const Exhibit& e : b.report().exhibits) names.insert(e.param);
  bool coeffs = true;
  std::string detail;
  for (const Exhibit& e : b.report().exhibits) {
    coeffs = coeffs && e.coefficient >= e.required;
    if (!detail.empty()) detail += "; ";
    detail += e.param + ": " + Describe(e.coefficient) + " >= " + std::to_string(e.required);
  }
  b.Check("five-distinct-exhibits", "length-at-least-five",
          b.report().exhibits.size() == kRequiredExhibits && names.size() == kRequiredExhibits,
          std::to_string(names.size()) + " distinct exhibits, duals of the case " +
              ToString(dual_kind) + " exhibits");
  b.Check("exhibit-detection-coefficients", "detection-word-positivity", coeffs, detail);
  std::vector<Segment> x_support = Cat(gamma.segs, {du});
  if (!gamma.tail.empty()) x_support.push_back(gamma.tail);
  std::vector<Segment> dual_support = Cat(dual.segs, {du});
  b.Check("support-bookkeeping", "cuspidal-support-conservation",
          AbsSupport(x_support) == AbsSupport(dual_support),
          "gamma and its dual share the absolute support");
  b.Check("multiplicity-at-most-four", "multiplicity-bound",
          b.report().mult_bound <= kMultiplicityCeiling &&
              dual_report.mult_bound <= kMultiplicityCeiling,
          "direct coefficient " + Describe(b.report().mult_bound) + ", transported " +
              Describe(dual_report.mult_bound));
  std::vector<std::string> axioms = dual_report.axioms_used;
  axioms.push_back("AX-REGULAR-JACQUET-REGIONS");
  return b.Finish(axioms);
}

VerificationReport Verify(const SubquotientParam& gamma,
                          const CuspidalContext& ctx) {
  switch (ClassifyCase(gamma)) {
    case CaseKind::kA:
      return VerifyCaseA(gamma, ctx);
    case CaseKind::kB:
      return VerifyCaseB(gamma, ctx);
    case CaseKind::kC:
      return VerifyCaseC(gamma, ctx);
    case CaseKind::kException:
      break;
  }
  throw std::invalid_argument(gamma.ToString() + " is an excluded parameter");
}

SweepBlock SweepOne(const CuspidalContext& ctx, std::int64_t n, unsigned threads) {
  SweepBlock block;
  block.alpha = ctx.alpha();
  block.n = n;
  const std::vector<SubquotientParam> params = SubquotientEnumerate(n, ctx);
  block.parameter_count = params.size();
  std::vector<SubquotientParam> work;
  for (const SubquotientParam& p : params) {
    if (ClassifyCase(p) == CaseKind::kException) {
      block.exceptions.push_back(p);
    } else {
      work.push_back(p);
    }
  }
  // Warm the shared region table before fanning out.
  RegionWords(Region(n + 1, false), n, ctx);

  block.reports.resize(work.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, work.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(work.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        block.reports[i] = Verify(work[i], ctx);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return block;
}

std::vector<SweepBlock> Sweep(const std::vector<Exponent>& alphas,
                              const std::vector<std::int64_t>& ns,
                              unsigned threads) {
  std::vector<SweepBlock> out;
  for (const Exponent a : alphas) {
    const CuspidalContext ctx(a);
    for (const std::int64_t n : ns) out.push_back(SweepOne(ctx, n, threads));
  }
  return out;
}

nlohmann::ordered_json ToJson(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["alpha"] = r.alpha.ToString();
  j["n"] = r.n;
  j["gamma"] = r.gamma.ToString();
  j["case"] = ToString(r.kind);
  if (r.dual_gamma) {
    j["dual_gamma"] = r.dual_gamma->ToString();
    j["dual_case"] = ToString(*r.dual_kind);
  }
  j["delta_u"] = r.delta_u.ToString();
  j["pi"] = r.pi;
  ordered_json exhibits = ordered_json::array();
  for (const Exhibit& e : r.exhibits) {
    ordered_json x;
    x["param"] = e.param;
    x["word"] = WordToString(e.word);
    x["required"] = e.required;
    x["coefficient"] = e.coefficient.str();
    x["axioms"] = e.axioms;
    exhibits.push_back(std::move(x));
  }
  j["exhibits"] = std::move(exhibits);
  j["mult_bound"] = r.mult_bound.str();
  ordered_json bounds = ordered_json::object();
  for (const NamedBound& nb : r.other_bounds) bounds[nb.name] = nb.value.str();
  j["other_bounds"] = std::move(bounds);
  j["axioms_used"] = r.axioms_used;
  ordered_json checks = ordered_json::array();
  for (const CheckEntry& c : r.checks) {
    checks.push_back(ordered_json{{"name", c.name},
                                  {"anchor", c.anchor},
                                  {"pass", c.pass},
                                  {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["verdict"] = r.Pass() ? "PASS" : "FAIL";
  j["scope"] = kScopeNote;
  return j;
}

nlohmann::ordered_json ToJson(const SweepBlock& b) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["alpha"] = b.alpha.ToString();
  j["n"] = b.n;
  j["parameter_count"] = b.parameter_count;
  ordered_json exc = ordered_json::array();
  for (const SubquotientParam& p : b.exceptions) exc.push_back(p.ToString());
  j["exceptions"] = std::move(exc);
  std::size_t counts[3] = {0, 0, 0};
  std::size_t passed = 0;
  for (const VerificationReport& r : b.reports) {
    if (r.kind != CaseKind::kException) ++counts[static_cast<int>(r.kind)];
    if (r.Pass()) ++passed;
  }
  j["summary"] = ordered_json{{"A", counts[0]},
                              {"B", counts[1]},
                              {"C", counts[2]},
                              {"pass", passed},
                              {"fail", b.reports.size() - passed}};
  ordered_json reports = ordered_json::array();
  for (const VerificationReport& r : b.reports) reports.push_back(ToJson(r));
  j["reports"] = std::move(reports);
  j["verdict"] = b.Pass() ? "PASS" : "FAIL";
  return j;
}

std::string RenderText(const VerificationReport& r) {
  std::ostringstream out;
  out << "gamma " << r.gamma.ToString() << "  case " << ToString(r.kind)
      << "  alpha " << r.alpha.ToString() << "  n " << r.n << "\n";
  if (r.dual_gamma) {
    out << "  dual " << r.dual_gamma->ToString() << " (case "
        << ToString(*r.dual_kind) << ")\n";
  }
  out << "  pi " << r.pi << "\n";
  for (const Exhibit& e : r.exhibits) {
    out << "  exhibit " << e.param << "  word " << WordToString(e.word)
        << "  coefficient " << e.coefficient << " >= " << e.required << "\n";
  }
  out << "  mult_bound " << r.mult_bound << " (ceiling " << kMultiplicityCeiling
      << ")\n";
  for (const NamedBound& nb : r.other_bounds) {
    out << "  bound " << nb.name << " " << nb.value << "\n";
  }
  for (const CheckEntry& c : r.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name << " ["
        << c.anchor << "] " << c.detail << "\n";
  }
  out << "  axioms";
  for (const std::string& a : r.axioms_used) out << " " << a;
  out << "\n  verdict " << (r.Pass() ? "PASS" : "FAIL") << " (" << kScopeNote
      << ")\n";
  return out.str();
}

std::string RenderText(const SweepBlock& b) {
  std::ostringstream out;
  out << "alpha " << b.alpha.ToString() << "  n " << b.n << "  parameters "
      << b.parameter_count << "  exceptions " << b.exceptions.size() << "\n";
  for (const SubquotientParam& p : b.exceptions) {
    out << "excluded " << p.ToString() << "\n";
  }
  for (const VerificationReport& r : b.reports) out << RenderText(r);
  out << "block verdict " << (b.Pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string BlockFileStem(const SweepBlock& b) {
  std::string a = b.alpha.ToString();
  std::replace(a.begin(), a.end(), '/', '_');
  return "alpha-" + a + "-n-" + std::to_string(b.n);
}

void WriteBlockFiles(const SweepBlock& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path stem = dir / BlockFileStem(b);
  const std::pair<std::string, std::string> files[] = {
      {stem.string() + ".json", ToJson(b).dump(2) + "\n"},
      {stem.string() + ".txt", RenderText(b)}};
  for (const auto& [path, body] : files) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) throw std::runtime_error("cannot write " + path);
  }
}

}  // namespace jacquet
