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

// Case verifiers for pi x| gamma, gamma an irreducible subquotient of
// nu^{alpha+n} x ... x nu^alpha x| sigma. Each report exhibits five
// subquotients of pi x| gamma and bounds the multiplicity of pi (x) gamma in
// mu*(pi x| gamma) by 4, all through word-model coefficients of standard
// modules plus the imported facts listed in AxiomTable().

#ifndef JACQUET_VERIFIER_H_
#define JACQUET_VERIFIER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jacquet/langlands_oracle.h"
#include "json.hpp"

namespace jacquet {

inline constexpr std::int64_t kMultiplicityCeiling = 4;
inline constexpr std::int64_t kRequiredExhibits = 5;

struct CheckEntry {
  std::string name;
  // Stable descriptive label of the fact being checked.
  std::string anchor;
  bool pass = false;
  std::string detail;
};

// A subquotient of pi x| gamma together with the word standing for it.
// Members of a +/- pair share one word, which must then have coefficient at
// least 2.
struct Exhibit {
  std::string param;
  Word word;
  std::int64_t required = 1;
  Coefficient coefficient = 0;
  std::vector<std::string> axioms;
};

struct NamedBound {
  std::string name;
  Coefficient value = 0;
};

struct VerificationReport {
  Exponent alpha;
  std::int64_t n = 0;
  SubquotientParam gamma;
  CaseKind kind = CaseKind::kA;
  Segment delta_u;
  std::string pi;
  std::vector<Exhibit> exhibits;
  Coefficient mult_bound = 0;
  // Further bounds computed for the same pair (refined or transported).
  std::vector<NamedBound> other_bounds;
  // Aubert dual parameter for case C.
  std::optional<SubquotientParam> dual_gamma;
  std::optional<CaseKind> dual_kind;
  std::vector<std::string> axioms_used;
  std::vector<CheckEntry> checks;

  bool Pass() const;
};

// Each throws std::invalid_argument if gamma is of a different case.
VerificationReport VerifyCaseA(const SubquotientParam& gamma,
                               const CuspidalContext& ctx);
VerificationReport VerifyCaseB(const SubquotientParam& gamma,
                               const CuspidalContext& ctx);
VerificationReport VerifyCaseC(const SubquotientParam& gamma,
                               const CuspidalContext& ctx);
// Dispatches on ClassifyCase; throws for the two exceptional parameters.
VerificationReport Verify(const SubquotientParam& gamma,
                          const CuspidalContext& ctx);

// All reports for one (alpha, n).
struct SweepBlock {
  Exponent alpha;
  std::int64_t n = 0;
  std::size_t parameter_count = 0;
  std::vector<SubquotientParam> exceptions;
  // Sorted by the text form of gamma.
  std::vector<VerificationReport> reports;

  bool Pass() const;
};

// Verifies every non-exceptional parameter, spreading work over `threads`
// workers (0 picks the hardware concurrency). Output does not depend on the
// thread count.
SweepBlock SweepOne(const CuspidalContext& ctx, std::int64_t n,
                    unsigned threads = 0);
std::vector<SweepBlock> Sweep(const std::vector<Exponent>& alphas,
                              const std::vector<std::int64_t>& ns,
                              unsigned threads = 0);

nlohmann::ordered_json ToJson(const VerificationReport& r);
nlohmann::ordered_json ToJson(const SweepBlock& b);
std::string RenderText(const VerificationReport& r);
std::string RenderText(const SweepBlock& b);
// "alpha-1_2-n-1" for alpha = 1/2, n = 1.
std::string BlockFileStem(const SweepBlock& b);
// Writes <dir>/<stem>.json and <dir>/<stem>.txt, creating dir if needed.
// Throws std::runtime_error if a file cannot be written.
void WriteBlockFiles(const SweepBlock& b, const std::filesystem::path& dir);

}  // namespace jacquet

#endif  // JACQUET_VERIFIER_H_
