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

#include "jacquet/cl_comodule.h"

#include <algorithm>
#include <functional>
#include <map>

#include "jacquet/word_count.h"

namespace jacquet {
namespace {

const char* SignText(PMSign s) { return s == PMSign::kPlus ? "+" : "-"; }

void RequireTransparent(const TemperedSymbol& t) {
  if (t.IsOpaque()) {
    throw OpaqueSymbolError("opaque tempered symbol " + t.ToString() +
                            ": only the pair sum is defined");
  }
}

ClassicalWordSum ToClassical(const WordSum& w) {
  ClassicalWordSum out;
  for (const auto& [word, c] : w) out.Add(word, c);
  return out;
}

WordSum ToGL(const ClassicalWordSum& w) {
  WordSum out;
  for (const auto& [word, c] : w) out.Add(word, c);
  return out;
}

// Right factors (as GL left factor, tempered remainder) of mu*(T).
std::vector<MuFactorTerm> TemperedMuStar(const TemperedSymbol& t,
                                         const CuspidalContext& ctx) {
  RequireTransparent(t);
  switch (t.kind()) {
    case TemperedKind::kGenSteinberg:
      return MuStarGenSteinberg(t.k(), ctx);
    case TemperedKind::kDualSteinberg:
      return MuStarDualSteinberg(t.k(), ctx);
    default:
      return {MuFactorTerm{GLOne(), TemperedSymbol::Cuspidal()}};
  }
}

}  // namespace

TemperedSymbol TemperedSymbol::Cuspidal() { return TemperedSymbol(); }

TemperedSymbol TemperedSymbol::GenSteinberg(std::int64_t k) {
  if (k < -1) throw std::invalid_argument("Steinberg index must be >= -1");
  if (k == -1) return Cuspidal();
  TemperedSymbol t;
  t.kind_ = TemperedKind::kGenSteinberg;
  t.k_ = k;
  return t;
}

TemperedSymbol TemperedSymbol::DualSteinberg(std::int64_t k) {
  if (k < -1) throw std::invalid_argument("Steinberg index must be >= -1");
  if (k == -1) return Cuspidal();
  TemperedSymbol t;
  t.kind_ = TemperedKind::kDualSteinberg;
  t.k_ = k;
  return t;
}

TemperedSymbol TemperedSymbol::TauPM(const Segment& du, PMSign sign) {
  if (du.empty() || du.lo() != -du.hi()) {
    throw std::invalid_argument("tau needs a symmetric segment, got " +
                                du.ToString());
  }
  TemperedSymbol t;
  t.kind_ = TemperedKind::kTauPM;
  t.seg_ = du;
  t.sign_ = sign;
  return t;
}

TemperedSymbol TemperedSymbol::DeltaPM(const Segment& d, PMSign sign) {
  if (d.empty() || d.hi() < -d.lo()) {
    throw std::invalid_argument("delta(D,+/-) needs D = [-a,c] with a <= c, got " +
                                d.ToString());
  }
  TemperedSymbol t;
  t.kind_ = TemperedKind::kDeltaPM;
  t.seg_ = d;
  t.sign_ = sign;
  return t;
}

std::strong_ordering TemperedSymbol::operator<=>(const TemperedSymbol& o) const {
  if (auto c = kind_ <=> o.kind_; c != 0) return c;
  if (auto c = k_ <=> o.k_; c != 0) return c;
  if (auto c = seg_ <=> o.seg_; c != 0) return c;
  return sign_ <=> o.sign_;
}

std::string TemperedSymbol::ToString() const {
  switch (kind_) {
    case TemperedKind::kCuspidal:
      return "sigma";
    case TemperedKind::kGenSteinberg:
      return "st(" + std::to_string(k_) + ")";
    case TemperedKind::kDualSteinberg:
      return "dst(" + std::to_string(k_) + ")";
    case TemperedKind::kTauPM:
      return "tau(" + seg_.ToString() + "," + SignText(sign_) + ")";
    case TemperedKind::kDeltaPM:
      return "dpm(" + seg_.ToString() + "," + SignText(sign_) + ")";
  }
  return "?";
}

std::strong_ordering ClassicalBasis::operator<=>(const ClassicalBasis& o) const {
  if (auto c = gl <=> o.gl; c != 0) return c;
  return temp <=> o.temp;
}

std::string ClassicalBasis::ToString() const {
  if (gl.empty()) return temp.ToString();
  return gl.ToString() + " |x " + temp.ToString();
}

void ValidateTempered(const TemperedSymbol& t, const CuspidalContext& ctx) {
  auto on_ladder = [&](Exponent a) {
    const Exponent diff = a - ctx.alpha();
    return diff.IsInteger() && diff.twice() >= 0;
  };
  switch (t.kind()) {
    case TemperedKind::kTauPM:
      if (!on_ladder(t.segment().hi())) {
        throw std::invalid_argument(t.ToString() + " is not based at alpha + k");
      }
      break;
    case TemperedKind::kDeltaPM:
      if (!on_ladder(-t.segment().lo())) {
        throw std::invalid_argument(t.ToString() + " is not based at alpha + k");
      }
      break;
    default:
      break;
  }
}

ClassicalElement ClassicalBasisElement(const Multisegment& d,
                                       const TemperedSymbol& t) {
  return ClassicalElement(ClassicalBasis{d, t});
}

ClassicalElement SigmaElement() {
  return ClassicalBasisElement(Multisegment{}, TemperedSymbol::Cuspidal());
}

ClassicalElement Rtimes(const GLElement& x, const ClassicalElement& y) {
  ClassicalElement out;
  for (const auto& [c, cc] : x) {
    for (const auto& [b, cb] : y) out.Add(ClassicalBasis{c + b.gl, b.temp}, cc * cb);
  }
  return out;
}

MuSum MuStar(const ClassicalElement& x, const CuspidalContext& ctx) {
  MuSum out;
  for (const auto& [basis, coeff] : x) {
    const std::vector<MuFactorTerm> tail = TemperedMuStar(basis.temp, ctx);
    const GLTensorElement twisted = TwistedComultiply(GLBasis(basis.gl));
    for (const auto& [ab, c1] : twisted) {
      for (const MuFactorTerm& term : tail) {
        for (const auto& [left, c2] : term.left) {
          out.Add({ab.first + left, ClassicalBasis{ab.second, term.right}},
                  coeff * c1 * c2);
        }
      }
    }
  }
  return out;
}

std::vector<MuFactorTerm> MuStarGenSteinberg(std::int64_t n,
                                             const CuspidalContext& ctx) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const Exponent a = ctx.alpha();
  std::vector<MuFactorTerm> out;
  for (std::int64_t k = -1; k <= n; ++k) {
    out.push_back({GLDelta(Segment(a.Step(k + 1), a.Step(n))),
                   TemperedSymbol::GenSteinberg(k)});
  }
  return out;
}

std::vector<MuFactorTerm> MuStarDualSteinberg(std::int64_t n,
                                              const CuspidalContext& ctx) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const Exponent a = ctx.alpha();
  std::vector<MuFactorTerm> out;
  for (std::int64_t k = -1; k <= n; ++k) {
    out.push_back({ExpandZelevinskySegment(Segment(-a.Step(n), -a.Step(k + 1))),
                   TemperedSymbol::DualSteinberg(k)});
  }
  return out;
}

MuSum Flatten(const std::vector<MuFactorTerm>& terms) {
  MuSum out;
  for (const MuFactorTerm& t : terms) {
    for (const auto& [left, c] : t.left) {
      out.Add({left, ClassicalBasis{Multisegment{}, t.right}}, c);
    }
  }
  return out;
}

PairSum MuStarPairSum(const TemperedSymbol& symbol, const CuspidalContext& ctx) {
  ValidateTempered(symbol, ctx);
  PairSum out;
  switch (symbol.kind()) {
    case TemperedKind::kTauPM:
      out.upper_bound = false;
      break;
    case TemperedKind::kDeltaPM:
      out.upper_bound = true;
      break;
    default:
      throw std::invalid_argument(symbol.ToString() + " is not a +/- symbol");
  }
  out.carrier = ClassicalBasisElement(Multisegment{symbol.segment()},
                                      TemperedSymbol::Cuspidal());
  out.value = MuStar(out.carrier, ctx);
  return out;
}

GLElement TwistedGLPartOfSegment(const Segment& d) {
  return TwistedGLPart(GLDelta(d));
}

GLElement TemperedSGL(const TemperedSymbol& t, const CuspidalContext& ctx) {
  RequireTransparent(t);
  const Exponent a = ctx.alpha();
  switch (t.kind()) {
    case TemperedKind::kGenSteinberg:
      return GLDelta(Segment(a, a.Step(t.k())));
    case TemperedKind::kDualSteinberg:
      return ExpandZelevinskySegment(Segment(-a.Step(t.k()), -a));
    default:
      return GLOne();
  }
}

GLElement SGL(const ClassicalElement& x, const CuspidalContext& ctx) {
  GLElement out;
  for (const auto& [basis, coeff] : x) {
    GLElement prod = TemperedSGL(basis.temp, ctx);
    for (const Segment& s : basis.gl.segments()) {
      prod = GLMul(prod, TwistedGLPartOfSegment(s));
    }
    out += coeff * prod;
  }
  return out;
}

ClassicalWordSum ClassicalWordModel(const ClassicalElement& x,
                                    const CuspidalContext& ctx) {
  return ToClassical(WordModel(SGL(x, ctx)));
}

ClassicalWordSum Classicalize(const WordSum& x) {
  WordSum out;
  for (const auto& [u, c] : x) {
    for (std::size_t j = 0; j <= u.size(); ++j) {
      Word prefix(u.begin(), u.begin() + j);
      Word flipped;
      for (std::size_t i = u.size(); i > j; --i) flipped.push_back(-u[i - 1]);
      out += c * Shuffle(WordSum(prefix), WordSum(flipped));
    }
  }
  return ToClassical(out);
}

ClassicalWordSum ClassicalShuffle(const ClassicalWordSum& x,
                                  const ClassicalWordSum& y) {
  return ToClassical(Shuffle(ToGL(x), ToGL(y)));
}

Coefficient ClassicalWordCoefficient(const Word& target,
                                     const ClassicalElement& x,
                                     const CuspidalContext& ctx) {
  std::map<Exponent, int> wanted;
  for (const Exponent e : target) ++wanted[e];

  Coefficient total = 0;
  for (const auto& [basis, coeff] : x) {
    const GLElement tail = TemperedSGL(basis.temp, ctx);
    const std::vector<Segment>& segs = basis.gl.segments();
    std::map<Exponent, int> left = wanted;
    std::vector<Word> runs;

    auto take = [&](const Word& w) {
      bool ok = true;
      for (const Exponent e : w) {
        if (--left[e] < 0) ok = false;
      }
      return ok;
    };
    auto give = [&](const Word& w) {
      for (const Exponent e : w) ++left[e];
    };

    // Each segment [a,c] contributes delta([-s,-a]) and delta([s+1,c]).
    std::function<void(std::size_t)> choose = [&](std::size_t i) {
      if (i == segs.size()) {
        for (const auto& [m, cm] : tail) {
          std::vector<Word> all = runs;
          for (const Segment& s : m.segments()) all.push_back(s.DescendingWord());
          total += coeff * cm * CountInterleavings(target, all);
        }
        return;
      }
      const Exponent a = segs[i].lo();
      const Exponent c = segs[i].hi();
      for (Exponent s = a.Step(-1); s <= c; s = s.Step(1)) {
        const Word low = Segment(-s, -a).DescendingWord();
        const Word high = Segment(s.Step(1), c).DescendingWord();
        const bool ok_low = take(low);
        const bool ok_high = take(high);
        if (ok_low && ok_high) {
          runs.push_back(low);
          runs.push_back(high);
          choose(i + 1);
          runs.pop_back();
          runs.pop_back();
        }
        give(high);
        give(low);
      }
    };
    choose(0);
  }
  return total;
}

Coefficient GLWordCoefficient(const Word& target, const GLElement& x) {
  Coefficient total = 0;
  for (const auto& [d, c] : x) {
    std::vector<Word> runs;
    for (const Segment& s : d.segments()) runs.push_back(s.DescendingWord());
    total += c * CountInterleavings(target, runs);
  }
  return total;
}

std::string ToString(const ClassicalElement& x) {
  return FormatCombination(x, [](const ClassicalBasis& b) { return b.ToString(); });
}

std::string ToString(const MuSum& x) {
  return FormatCombination(x, [](const std::pair<Multisegment, ClassicalBasis>& t) {
    return t.first.ToString() + " (x) " + t.second.ToString();
  });
}

std::string ToString(const ClassicalWordSum& x) {
  return FormatCombination(x, [](const Word& w) { return WordToString(w); });
}

}  // namespace jacquet
