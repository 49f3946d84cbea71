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

// The graded Hopf ring R of general linear groups on one cuspidal line,
// written in the basis of standard modules lambda(d), d a multisegment.
// A single segment d = {D} stands for the essentially square-integrable
// delta(D).

#ifndef JACQUET_GL_HOPF_H_
#define JACQUET_GL_HOPF_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/linear.h"
#include "jacquet/seg_core.h"

namespace jacquet {

using GLElement = Combination<Multisegment>;
using GLTensorElement = Combination<std::pair<Multisegment, Multisegment>>;

struct GLWordTag {};
// Minimal Jacquet module model: words with integer coefficients.
using WordSum = Combination<Word, GLWordTag>;

GLElement GLOne();
GLElement GLBasis(const Multisegment& d);
// delta(D); the empty segment gives 1.
GLElement GLDelta(const Segment& d);

// Multiplication (parabolic induction): lambda(c) x lambda(d) = lambda(c + d).
GLElement GLMul(const GLElement& x, const GLElement& y);
// Componentwise product in R (x) R.
GLTensorElement TensorMul(const GLTensorElement& x, const GLTensorElement& y);
GLElement GLContragredient(const GLElement& x);
// Component of grading `degree`.
GLElement GradedComponent(const GLElement& x, std::int64_t degree);

// m*(delta([lo,hi])) = sum_{i=lo-1}^{hi} delta([i+1,hi]) (x) delta([lo,i]).
GLTensorElement ComultiplyDelta(const Segment& d);
// m*(s(D)) = sum s([lo,i]) (x) s([i+1,hi]), each s expanded in the standard
// basis.
GLTensorElement ComultiplyZelevinskySegment(const Segment& d);
// m*, extended multiplicatively from segments.
GLTensorElement Comultiply(const GLElement& x);

// M* = (m (x) id) o (~ (x) m*) o kappa o m*, evaluated step by step.
GLTensorElement TwistedComultiply(const GLElement& x);
// The double sum
//   sum_{s=a-1}^{c} sum_{t=s}^{c} delta([-s,-a]) x delta([t+1,c]) (x) delta([s+1,t])
// for D = [a,c]. Must agree with TwistedComultiply({D}).
GLTensorElement TwistedComultiplyClosedForm(const Segment& d);
// Terms of M*(x) whose right factor is 1, returned as an element of R.
GLElement TwistedGLPart(const GLElement& x);

// Ring endomorphism delta(D) -> delta(D) + delta(D^-).
GLElement Derivative(const GLElement& x);
// Lowest-degree non-zero component of Derivative(x); zero for x = 0.
GLElement HighestDerivative(const GLElement& x);
// The conjugate t o Derivative o t, which sends s(D) -> s(D) + s(D^-).
GLElement ZelevinskyDerivative(const GLElement& x);
GLElement ZelevinskyHighestDerivative(const GLElement& x);

// Shuffle product of word sums.
WordSum Shuffle(const WordSum& x, const WordSum& y);
// Word model: lambda(d) goes to the shuffle of the descending words of its
// segments; extended linearly. Results are memoized per multisegment (see
// JACQUET_MEMO_CAPACITY in the README); memoization never changes results.
WordSum WordModel(const GLElement& x);
WordSum WordModel(const Multisegment& d);

// The Zelevinsky segment class s(D) in the standard basis, obtained by a
// unitriangular solve against the word model. The result is the unique
// combination of refinements of D whose word model is the single ascending
// word of D. Throws std::logic_error if the solve does not close.
GLElement ExpandZelevinskySegment(const Segment& d);
// Multisegments refining D into consecutive pieces (2^{card-1} of them).
std::vector<Multisegment> ConsecutiveRefinements(const Segment& d);

// Ring involution delta(D) -> s(D).
GLElement Involution(const GLElement& x);
// Product of s(D) over the segments of d, in the standard basis.
GLElement ZelevinskyProduct(const std::vector<Segment>& segs);

// Moeglin-Waldspurger algorithm: the multisegment a^t with L(a)^t = L(a^t).
Multisegment MoeglinWaldspurgerDual(const Multisegment& a);

std::string ToString(const GLElement& x);
std::string ToString(const GLTensorElement& x);
std::string ToString(const WordSum& x);

}  // namespace jacquet

#endif  // JACQUET_GL_HOPF_H_
