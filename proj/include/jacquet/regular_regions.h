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

// Minimal Jacquet modules of irreducibles in the regular (multiplicity free)
// situation. For GL, a multisegment whose support has no repeated letter
// gives L(d) the words in which, for every adjacent pair x, x+1 of the
// support, x+1 comes before x exactly when both lie in one segment; Z(d)
// reverses that rule. For the ladder alpha, ..., alpha+n over sigma, each
// signed permutation falls into one region indexed by n+1 bits, and each
// irreducible subquotient owns exactly one region.

#ifndef JACQUET_REGULAR_REGIONS_H_
#define JACQUET_REGULAR_REGIONS_H_

#include <cstdint>
#include <vector>

#include "jacquet/cl_comodule.h"
#include "jacquet/gl_hopf.h"
#include "jacquet/langlands_oracle.h"

namespace jacquet {

// Throws std::invalid_argument if the support of d repeats a letter.
WordSum RegularLWords(const Multisegment& d);
WordSum RegularZWords(const Multisegment& d);
// One word of each region, built directly: segments from lowest to highest,
// each descending (L), or from highest to lowest, each ascending (Z).
Word RegularLWord(const Multisegment& d);
Word RegularZWord(const Multisegment& d);

using Region = std::vector<bool>;

// Region bits of a signed permutation of the ladder alpha, ..., alpha+n:
// bit 0 is the sign of the +-alpha letter; bit j+1 looks at the letters of
// absolute value alpha+j+1 and alpha+j and records the sign of the former if
// it comes first, else the opposite sign of the latter. Throws unless the
// absolute values of w are exactly the ladder.
Region ClassicalRegion(const Word& w, const CuspidalContext& ctx);
Region ParamRegion(const SubquotientParam& p, const CuspidalContext& ctx);
// All signed words of the region, each with coefficient 1.
ClassicalWordSum RegionWords(const Region& r, std::int64_t n,
                             const CuspidalContext& ctx);

// Aubert dual inside the ladder: the parameter whose region is the bitwise
// complement of p's region.
SubquotientParam AubertDual(const SubquotientParam& p,
                            const CuspidalContext& ctx);

// Every letter negated in place.
Word Negate(const Word& w);

}  // namespace jacquet

#endif  // JACQUET_REGULAR_REGIONS_H_
