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

#include <algorithm>
#include <stdexcept>

namespace jacquet {
namespace {

std::string JoinSegments(const std::vector<Segment>& segs) {
  std::string out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0) out += ",";
    out += ShortSegment(segs[i]);
  }
  return out;
}

// Each segment lies strictly above the next one.
bool StrictlyDecreasing(const std::vector<Segment>& segs) {
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    if (!(segs[i + 1].hi() < segs[i].lo())) return false;
  }
  return true;
}

// Non-empty, decreasing, and exactly covering [from, to].
bool CoversExactly(const std::vector<Segment>& segs, Exponent from, Exponent to) {
  if (segs.empty()) return from > to;
  for (const Segment& s : segs) {
    if (s.empty()) return false;
  }
  if (!StrictlyDecreasing(segs)) return false;
  if (segs.front().hi() != to || segs.back().lo() != from) return false;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    if (segs[i + 1].hi().Step(1) != segs[i].lo()) return false;
  }
  return true;
}

std::vector<Segment> Concat(std::vector<Segment> a, const std::vector<Segment>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::string ShortSegment(const Segment& s) {
  if (!s.empty() && s.lo() == s.hi()) return "[" + s.lo().ToString() + "]";
  return s.ToString();
}

LanglandsDatum::LanglandsDatum(std::vector<Segment> gl_part, TemperedSymbol temp)
    : temp_(std::move(temp)) {
  for (const Segment& s : gl_part) {
    if (s.empty() || s.CenterKey() <= 0) {
      throw std::invalid_argument("Langlands segment " + s.ToString() +
                                  " must be non-empty with positive center");
    }
  }
  gl_ = LanglandsSort(std::move(gl_part));
}

std::string LanglandsDatum::ToString() const {
  if (gl_.empty()) return temp_.ToString();
  return "L(" + JoinSegments(gl_) + ";" + temp_.ToString() + ")";
}

std::string SubquotientParam::ToString() const {
  if (tail.empty()) return "L(" + JoinSegments(segs) + ";sigma)";
  const std::string temp = "d(" + ShortSegment(tail) + ";sigma)";
  if (segs.empty()) return temp;
  return "L(" + JoinSegments(segs) + ";" + temp + ")";
}

std::string ToString(CaseKind c) {
  switch (c) {
    case CaseKind::kA:
      return "A";
    case CaseKind::kB:
      return "B";
    case CaseKind::kC:
      return "C";
    case CaseKind::kException:
      return "EXCEPTION";
  }
  return "?";
}

TemperedSymbol TailSymbol(const Segment& tail, const CuspidalContext& ctx) {
  if (tail.empty()) return TemperedSymbol::Cuspidal();
  if (tail.lo() != ctx.alpha()) {
    throw std::invalid_argument("tempered tail " + tail.ToString() +
                                " does not start at alpha");
  }
  return TemperedSymbol::GenSteinberg(tail.Cardinality() - 1);
}

LanglandsDatum ToDatum(const SubquotientParam& p, const CuspidalContext& ctx) {
  return LanglandsDatum(p.segs, TailSymbol(p.tail, ctx));
}

ClassicalElement StandardModule(const SubquotientParam& p,
                                const CuspidalContext& ctx) {
  return ClassicalBasisElement(Multisegment(p.segs), TailSymbol(p.tail, ctx));
}

Word TemperedLeadingWord(const TemperedSymbol& t, const CuspidalContext& ctx) {
  const Exponent a = ctx.alpha();
  switch (t.kind()) {
    case TemperedKind::kCuspidal:
      return {};
    case TemperedKind::kGenSteinberg:
      return Segment(a, a.Step(t.k())).DescendingWord();
    case TemperedKind::kDualSteinberg:
      return Segment(-a.Step(t.k()), -a).AscendingWord();
    default:
      throw OpaqueSymbolError("opaque tempered symbol " + t.ToString() +
                              ": only the pair sum is defined");
  }
}

Word DetectionWord(const LanglandsDatum& l, const CuspidalContext& ctx) {
  Word w;
  for (const Segment& s : l.gl_part()) {
    const Word piece = SegContragredient(s).DescendingWord();
    w.insert(w.end(), piece.begin(), piece.end());
  }
  const Word tail = TemperedLeadingWord(l.temp(), ctx);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

Coefficient MultUpperBound(const Word& target, const ClassicalElement& x,
                           const CuspidalContext& ctx) {
  return ClassicalWordCoefficient(target, x, ctx);
}

Coefficient TensorMultUpperBound(const Word& left, const Word& right,
                                 const ClassicalElement& x,
                                 const CuspidalContext& ctx) {
  Word w = left;
  w.insert(w.end(), right.begin(), right.end());
  return ClassicalWordCoefficient(w, x, ctx);
}

Coefficient TensorMultUpperBoundBySplitting(const Word& left, const Word& right,
                                            const ClassicalElement& x,
                                            const CuspidalContext& ctx) {
  Coefficient total = 0;
  const auto degree = static_cast<std::int64_t>(left.size());
  for (const auto& [uv, c] : MuStar(x, ctx)) {
    if (uv.first.Degree() != degree) continue;
    const Coefficient cu = GLWordCoefficient(left, GLBasis(uv.first));
    if (cu == 0) continue;
    total += c * cu * ClassicalWordCoefficient(right, ClassicalElement(uv.second), ctx);
  }
  return total;
}

std::vector<std::vector<Segment>> TwoTermGL(const std::vector<Segment>& a,
                                            const Segment& dk) {
  if (a.empty()) throw std::invalid_argument("a must be non-empty");
  if (dk.empty()) throw std::invalid_argument("D_k must be non-empty");
  for (const Segment& s : a) {
    if (s.empty()) throw std::invalid_argument("a contains an empty segment");
  }
  std::vector<Segment> all = a;
  all.push_back(dk);
  if (!StrictlyDecreasing(all)) {
    throw std::invalid_argument("(a, D_k) is not a decreasing disjoint sequence");
  }
  std::vector<std::vector<Segment>> out{all};
  if (SegLinked(a.back(), dk)) {
    std::vector<Segment> merged(a.begin(), a.end() - 1);
    merged.push_back(SegUnion(a.back(), dk));
    out.push_back(std::move(merged));
  }
  return out;
}

CutDecomposition DecomposeAtCut(std::int64_t n, std::int64_t cut,
                                const std::vector<Segment>& upper,
                                const std::vector<Segment>& lower,
                                const Segment& last,
                                const CuspidalContext& ctx) {
  if (n < 1) throw std::invalid_argument("hypothesis n >= 1 fails");
  if (cut < 0 || cut > n - 1) {
    throw std::invalid_argument("hypothesis 0 <= cut <= n-1 fails");
  }
  const Exponent a = ctx.alpha();
  if (!CoversExactly(upper, a.Step(cut + 1), a.Step(n))) {
    throw std::invalid_argument(
        "hypothesis: upper segments must be non-empty, decreasing, and cover "
        "alpha+cut+1 .. alpha+n");
  }
  for (const Segment& s : lower) {
    if (s.empty()) {
      throw std::invalid_argument("hypothesis: lower segments must be non-empty");
    }
  }
  std::vector<Segment> low_all = lower;
  if (!last.empty()) low_all.push_back(last);
  if (!CoversExactly(low_all, a, a.Step(cut))) {
    throw std::invalid_argument(
        "hypothesis: lower segments and last must be decreasing and cover "
        "alpha .. alpha+cut");
  }

  const std::vector<Segment> head(upper.begin(), upper.end() - 1);
  const Segment dk = upper.back();
  CutDecomposition out;
  if (!lower.empty()) {
    out.form = CutForm::kInner;
    const Segment dk1 = lower.front();
    const std::vector<Segment> tail(lower.begin() + 1, lower.end());
    out.first = {Concat(Concat(head, {dk, dk1}), tail), last};
    out.second = {Concat(Concat(head, {SegUnion(dk, dk1)}), tail), last};
  } else {
    out.form = CutForm::kAtTempered;
    out.first = {Concat(head, {dk}), last};
    out.second = {head, SegUnion(dk, last)};
  }
  return out;
}

std::vector<SubquotientParam> SubquotientEnumerate(std::int64_t n,
                                                   const CuspidalContext& ctx) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const Exponent a = ctx.alpha();
  std::vector<SubquotientParam> out;
  // Bit i set: a cut between alpha+i and alpha+i+1.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Segment> ascending;
    Exponent start = a;
    for (std::int64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        ascending.emplace_back(start, a.Step(i));
        start = a.Step(i + 1);
      }
    }
    ascending.emplace_back(start, a.Step(n));
    std::vector<Segment> segs(ascending.rbegin(), ascending.rend());
    out.push_back({segs, Segment()});
    std::vector<Segment> rest(segs.begin(), segs.end() - 1);
    out.push_back({rest, segs.back()});
  }
  std::sort(out.begin(), out.end(),
            [](const SubquotientParam& x, const SubquotientParam& y) {
              return x.ToString() < y.ToString();
            });
  return out;
}

std::int64_t LadderLength(const SubquotientParam& p) {
  std::int64_t total = p.tail.empty() ? 0 : p.tail.Cardinality();
  for (const Segment& s : p.segs) total += s.Cardinality();
  return total - 1;
}

CaseKind ClassifyCase(const SubquotientParam& p) {
  if (!p.tail.empty()) {
    return p.segs.empty() ? CaseKind::kException : CaseKind::kC;
  }
  if (p.segs.empty()) throw std::invalid_argument("empty parameter");
  const bool all_points = std::all_of(p.segs.begin(), p.segs.end(), [](const Segment& s) {
    return s.Cardinality() == 1;
  });
  if (all_points) return CaseKind::kException;
  return p.segs.back().Cardinality() > 1 ? CaseKind::kA : CaseKind::kB;
}

const std::vector<Axiom>& AxiomTable() {
  static const std::vector<Axiom> table = {
      {"AX-TAU-REDUCIBILITY",
       "delta([-a',a']) x| sigma, a' in alpha+Z_{>=0}, is the sum of two "
       "inequivalent irreducible tempered pieces tau(+) and tau(-)."},
      {"AX-DELTA-PM",
       "For D = [-a',c] with a' < c, delta(D) x| sigma contains exactly two "
       "irreducible square-integrable subrepresentations delta(D,+) and "
       "delta(D,-)."},
      {"AX-LANGLANDS-SUBQUOTIENT",
       "If pi x| T contains T' and the Langlands data line up, L(a; T') is a "
       "subquotient of lambda(a) x pi x| T; in particular L(a, d; T) is a "
       "subquotient of L(a, d) x| T and of delta(D_u) x| L(a; T) for the "
       "two tau pieces."},
      {"AX-HD-SUPPORT",
       "An irreducible representation of a general linear group is determined "
       "by its cuspidal support and its highest derivative; Z(m) has highest "
       "derivative Z(m^-)."},
      {"AX-LINKED-PRODUCT",
       "For card(D_k) > 1, L(a+(D)) x nu^alpha is irreducible and a "
       "subquotient of delta(D_u) x L(a+(D_k)); the two-term rules for "
       "linked products of Langlands quotients hold."},
      {"AX-STANDARD-MODULE-EXPONENTS",
       "L(D_1,...,D_k; T) embeds into the induced representation with "
       "contragredient segments in reverse order, so its detection word has "
       "coefficient at least 1 in its minimal Jacquet module."},
      {"AX-REGULAR-JACQUET-REGIONS",
       "For the ladder alpha, ..., alpha+n the principal series is "
       "multiplicity free; each irreducible subquotient owns the signed words "
       "of one sign/order region, and the Aubert involution negates every "
       "letter."},
  };
  return table;
}

}  // namespace jacquet
