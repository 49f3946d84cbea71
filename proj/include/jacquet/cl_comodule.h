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

// The R-comodule R(S) of classical groups built on one cuspidal sigma:
// induced classes lambda(d) x| T, the comodule map mu*, and the signed word
// model of minimal Jacquet modules.

#ifndef JACQUET_CL_COMODULE_H_
#define JACQUET_CL_COMODULE_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/gl_hopf.h"
#include "jacquet/linear.h"
#include "jacquet/seg_core.h"

namespace jacquet {

enum class TemperedKind {
  kCuspidal,       // sigma
  kGenSteinberg,   // delta([alpha, alpha+k]; sigma)
  kDualSteinberg,  // L(nu^alpha, ..., nu^{alpha+k}; sigma)
  kTauPM,          // tau(D_u, +/-; sigma), D_u = [-a', a']
  kDeltaPM,        // delta(D, +/-; sigma), D = [-a', c]
};

enum class PMSign { kPlus, kMinus };

// Tempered (or dual-Steinberg) classical representation on the line. The
// +/- kinds are opaque: only the sum over both signs has known Jacquet data.
class TemperedSymbol {
 public:
  TemperedSymbol() = default;

  static TemperedSymbol Cuspidal();
  // k >= -1; k = -1 is sigma itself.
  static TemperedSymbol GenSteinberg(std::int64_t k);
  static TemperedSymbol DualSteinberg(std::int64_t k);
  static TemperedSymbol TauPM(const Segment& du, PMSign sign);
  static TemperedSymbol DeltaPM(const Segment& d, PMSign sign);

  TemperedKind kind() const { return kind_; }
  std::int64_t k() const { return k_; }
  const Segment& segment() const { return seg_; }
  PMSign sign() const { return sign_; }
  bool IsOpaque() const {
    return kind_ == TemperedKind::kTauPM || kind_ == TemperedKind::kDeltaPM;
  }

  bool operator==(const TemperedSymbol& o) const = default;
  std::strong_ordering operator<=>(const TemperedSymbol& o) const;

  // "sigma", "st(1)", "dst(0)", "tau([-1,1],+)", "dpm([-1,2],-)".
  std::string ToString() const;

 private:
  TemperedKind kind_ = TemperedKind::kCuspidal;
  std::int64_t k_ = -1;
  Segment seg_;
  PMSign sign_ = PMSign::kPlus;
};

// The class lambda(gl) x| temp.
struct ClassicalBasis {
  Multisegment gl;
  TemperedSymbol temp;

  bool operator==(const ClassicalBasis& o) const = default;
  std::strong_ordering operator<=>(const ClassicalBasis& o) const;
  std::string ToString() const;
};

using ClassicalElement = Combination<ClassicalBasis>;
using MuSum = Combination<std::pair<Multisegment, ClassicalBasis>>;

struct ClassicalWordTag {};
// Minimal Jacquet modules in R(S); sigma is implicit at the right end.
using ClassicalWordSum = Combination<Word, ClassicalWordTag>;

// Thrown whenever Jacquet data of a single opaque +/- symbol is requested.
class OpaqueSymbolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validates a tempered symbol against alpha: Steinberg indices >= -1,
// D_u = [-a', a'] and D = [-a', c] with a' in alpha + Z_{>=0}, a' <= c.
void ValidateTempered(const TemperedSymbol& t, const CuspidalContext& ctx);

ClassicalElement ClassicalBasisElement(const Multisegment& d,
                                       const TemperedSymbol& t);
ClassicalElement SigmaElement();

// Bilinear action: lambda(c) x| (lambda(d) x| T) = lambda(c + d) x| T.
ClassicalElement Rtimes(const GLElement& x, const ClassicalElement& y);

// mu*(x) = M*(pi) x| mu*(T) on each basis element. Throws OpaqueSymbolError
// for +/- symbols.
MuSum MuStar(const ClassicalElement& x, const CuspidalContext& ctx);

// One term of a factored mu* formula: left (x) (empty x| right).
struct MuFactorTerm {
  GLElement left;
  TemperedSymbol right;
};

// sum_{k=-1}^{n} delta([alpha+k+1, alpha+n]) (x) delta([alpha, alpha+k]; sigma).
std::vector<MuFactorTerm> MuStarGenSteinberg(std::int64_t n,
                                             const CuspidalContext& ctx);
// sum_{k=-1}^{n} s([-(alpha+n), -(alpha+k+1)]) (x) L(nu^{alpha+k},...,nu^alpha; sigma),
// the left factor being the Zelevinsky segment class.
std::vector<MuFactorTerm> MuStarDualSteinberg(std::int64_t n,
                                              const CuspidalContext& ctx);
MuSum Flatten(const std::vector<MuFactorTerm>& terms);

// mu* of a +/- pair summed over both signs.
struct PairSum {
  MuSum value;
  // True when `value` only bounds the pair sum from above.
  bool upper_bound = false;
  // The induced class whose mu* is `value`.
  ClassicalElement carrier;
};
// `symbol` names either member of the pair; its sign is ignored.
PairSum MuStarPairSum(const TemperedSymbol& symbol, const CuspidalContext& ctx);

// GL part of M*(delta(D)) for one segment D = [a,c]:
// sum_{s=a-1}^{c} delta([-s,-a]) x delta([s+1,c]).
GLElement TwistedGLPartOfSegment(const Segment& d);
// Terms of mu*(x) whose right factor is sigma, as an element of R.
GLElement SGL(const ClassicalElement& x, const CuspidalContext& ctx);
// SGL of a tempered symbol alone.
GLElement TemperedSGL(const TemperedSymbol& t, const CuspidalContext& ctx);

// Word model: the GL word model of SGL(x).
ClassicalWordSum ClassicalWordModel(const ClassicalElement& x,
                                    const CuspidalContext& ctx);
// Word of a single word under u -> sum_j shuffle(u[0..j), reverse(-u[j..])).
ClassicalWordSum Classicalize(const WordSum& x);
ClassicalWordSum ClassicalShuffle(const ClassicalWordSum& x,
                                  const ClassicalWordSum& y);

// Coefficient of `target` in ClassicalWordModel(x), computed without
// expanding the word model.
Coefficient ClassicalWordCoefficient(const Word& target,
                                     const ClassicalElement& x,
                                     const CuspidalContext& ctx);
// Coefficient of `target` in WordModel(x).
Coefficient GLWordCoefficient(const Word& target, const GLElement& x);

std::string ToString(const ClassicalElement& x);
std::string ToString(const MuSum& x);
std::string ToString(const ClassicalWordSum& x);

}  // namespace jacquet

#endif  // JACQUET_CL_COMODULE_H_
