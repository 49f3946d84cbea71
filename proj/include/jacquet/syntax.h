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

// Text syntax shared by the command line and the tests.
//
//   GL expressions      2*d[0,1] x d[2] - s[0,2] + t(d[0,1]) + {[0,0],[1,1]}
//   classical classes   d[-1,1] x d[1,2] |x sigma      st(1)     dst(0)
//   tempered symbols    sigma  st(n)  dst(n)  tau(+)  tau([-2,2],-)
//                       dpm([-1,2],+)   ("+-" names the pair sum)
//   words               (1,0,-1)   or   1,0,-1
//   parameters          L([1,2];sigma)  L([2];d([1];sigma))  d([1,2];sigma)
//
// Every parser throws std::invalid_argument with the offending position.

#ifndef JACQUET_SYNTAX_H_
#define JACQUET_SYNTAX_H_

#include <string_view>

#include "jacquet/cl_comodule.h"
#include "jacquet/gl_hopf.h"
#include "jacquet/langlands_oracle.h"

namespace jacquet {

Segment ParseSegment(std::string_view text);
Word ParseWord(std::string_view text);
GLElement ParseGLExpression(std::string_view text);

struct ParsedTempered {
  TemperedSymbol symbol;
  // True for "tau(+-)" / "dpm(D,+-)".
  bool pair = false;
};
// `tau(+)` abbreviates tau([-alpha,alpha],+).
ParsedTempered ParseTempered(std::string_view text, const CuspidalContext& ctx);

struct ParsedClassical {
  ClassicalElement element;
  // Set when the tempered part is a pair sum; element then carries the
  // first member of the pair.
  bool pair = false;
  TemperedSymbol pair_symbol;
};
// "GLEXPR |x TEMPERED", or a tempered symbol alone.
ParsedClassical ParseClassical(std::string_view text, const CuspidalContext& ctx);

SubquotientParam ParseParam(std::string_view text, const CuspidalContext& ctx);

std::vector<Exponent> ParseExponentList(std::string_view text);
std::vector<std::int64_t> ParseIntList(std::string_view text);

}  // namespace jacquet

#endif  // JACQUET_SYNTAX_H_
