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

// Langlands data, detection words and sound multiplicity bounds.
//
// A detection word of an irreducible L is a word known to occur in its
// minimal Jacquet module with coefficient >= 1. The coefficient of that word
// in the word model of any genuine class x then bounds the multiplicity of L
// in x from above.

#ifndef JACQUET_LANGLANDS_ORACLE_H_
#define JACQUET_LANGLANDS_ORACLE_H_

#include <string>
#include <utility>
#include <vector>

#include "jacquet/cl_comodule.h"
#include "jacquet/gl_hopf.h"
#include "jacquet/seg_core.h"

namespace jacquet {

// L(D_1, ..., D_k; T) with every D_i of positive center.
class LanglandsDatum {
 public:
  // Sorts the segments into Langlands order; throws std::invalid_argument if
  // a segment is empty or has center <= 0.
  LanglandsDatum(std::vector<Segment> gl_part, TemperedSymbol temp);

  const std::vector<Segment>& gl_part() const { return gl_; }
  const TemperedSymbol& temp() const { return temp_; }

  bool operator==(const LanglandsDatum& o) const = default;

  // "L([1,2],[1];sigma)"; points print as "[x]".
  std::string ToString() const;

 private:
  std::vector<Segment> gl_;
  TemperedSymbol temp_;
};

// gamma = L(D_1, ..., D_k; delta(D_{k+1}; sigma)) with D_1, ..., D_{k+1}
// partitioning {alpha, ..., alpha+n} into decreasing segments. An empty
// tail means sigma.
struct SubquotientParam {
  std::vector<Segment> segs;
  Segment tail;

  bool operator==(const SubquotientParam& o) const = default;
  // "L([2];d([1];sigma))", "L([1,2];sigma)", "d([1,2];sigma)".
  std::string ToString() const;
};

enum class CaseKind { kA, kB, kC, kException };
std::string ToString(CaseKind c);

// "[x]" for points, "[lo,hi]" otherwise.
std::string ShortSegment(const Segment& s);

// The tempered symbol delta(tail; sigma); throws unless the tail starts at
// alpha.
TemperedSymbol TailSymbol(const Segment& tail, const CuspidalContext& ctx);
LanglandsDatum ToDatum(const SubquotientParam& p, const CuspidalContext& ctx);
// lambda(segs) x| delta(tail; sigma), the standard module containing p.
ClassicalElement StandardModule(const SubquotientParam& p,
                                const CuspidalContext& ctx);

// Leading word of a transparent tempered symbol: () for sigma,
// (alpha+k, ..., alpha) for st(k), (-alpha-k, ..., -alpha) for dst(k).
Word TemperedLeadingWord(const TemperedSymbol& t, const CuspidalContext& ctx);
// Descending words of the contragredient segments, most negative segment
// first, then the tempered leading word. Throws OpaqueSymbolError for +/-.
Word DetectionWord(const LanglandsDatum& l, const CuspidalContext& ctx);

// Coefficient of target in the word model of x.
Coefficient MultUpperBound(const Word& target, const ClassicalElement& x,
                           const CuspidalContext& ctx);
// Coefficient of left ++ right in the word model of x; bounds the multiplicity
// of pi (x) gamma in mu*(x) for pi, gamma detected by left and right.
Coefficient TensorMultUpperBound(const Word& left, const Word& right,
                                 const ClassicalElement& x,
                                 const CuspidalContext& ctx);
// The same number summed over the terms u (x) v of mu*(x) with deg u equal to
// the length of left: coeff(left, W(u)) * coeff(right, W(v)).
Coefficient TensorMultUpperBoundBySplitting(const Word& left, const Word& right,
                                            const ClassicalElement& x,
                                            const CuspidalContext& ctx);

// L(a) x delta(D_k) = L(a, D_k) + L(a_1, D_{k-1} u D_k) when the last
// segment of a and D_k are linked, otherwise L(a, D_k) alone. `a` must be a
// non-empty sequence of segments each lying strictly above the next, with
// D_k below the last one. Returns GL parameters as segment sequences.
std::vector<std::vector<Segment>> TwoTermGL(const std::vector<Segment>& a,
                                            const Segment& dk);

// Two-summand decomposition of a product over the ladder cut at alpha+cut:
//   upper = (D_1, ..., D_k) covering {alpha+cut+1, ..., alpha+n},
//   lower = (D_{k+1}, ..., D_{l-1}) non-empty segments and
//   last = D_l (possibly empty) covering {alpha, ..., alpha+cut} together.
// With `lower` non-empty:
//   L(a+(D_k)) x| L((D_{k+1})+tail; delta(D_l;sigma))
//     = L(a+(D_k,D_{k+1})+tail; delta(D_l;sigma))
//     + L(a+(D_k u D_{k+1})+tail; delta(D_l;sigma)),
// where a = (D_1..D_{k-1}) and tail = (D_{k+2}..D_{l-1}). With `lower`
// empty:
//   L(a+(D_k)) x| delta(D_l;sigma)
//     = L(a+(D_k); delta(D_l;sigma)) + L(a; delta(D_k u D_l;sigma)).
// Throws std::invalid_argument naming the failed hypothesis.
enum class CutForm { kInner, kAtTempered };
struct CutDecomposition {
  CutForm form;
  SubquotientParam first;
  SubquotientParam second;
};
CutDecomposition DecomposeAtCut(std::int64_t n, std::int64_t cut,
                                const std::vector<Segment>& upper,
                                const std::vector<Segment>& lower,
                                const Segment& last,
                                const CuspidalContext& ctx);

// All subquotient parameters for the ladder {alpha, ..., alpha+n}, sorted
// by their text form.
std::vector<SubquotientParam> SubquotientEnumerate(std::int64_t n,
                                                   const CuspidalContext& ctx);
// Largest ladder exponent alpha+n covered by p (n from the support size).
std::int64_t LadderLength(const SubquotientParam& p);

// EXCEPTION for the generalized Steinberg and L(nu^alpha, ..., nu^{alpha+n};
// sigma); A: tail empty and card(D_k) > 1; B: tail empty, card(D_k) = 1;
// C: tail non-empty.
CaseKind ClassifyCase(const SubquotientParam& p);

struct Axiom {
  std::string id;
  std::string statement;
};
// Imported facts the verifiers rely on, keyed by stable identifiers.
const std::vector<Axiom>& AxiomTable();

}  // namespace jacquet

#endif  // JACQUET_LANGLANDS_ORACLE_H_
