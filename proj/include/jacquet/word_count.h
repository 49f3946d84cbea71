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

// Counting a single word inside a shuffle product without expanding it.

#ifndef JACQUET_WORD_COUNT_H_
#define JACQUET_WORD_COUNT_H_

#include <span>
#include <vector>

#include "jacquet/linear.h"
#include "jacquet/seg_core.h"

namespace jacquet {

// Number of ways to read `target` as an interleaving of `runs`, each run kept
// in order. Equal runs are counted separately, matching the coefficient of
// `target` in the shuffle product of the runs.
Coefficient CountInterleavings(std::span<const Exponent> target,
                               std::span<const Word> runs);

// True iff the letters of `target` are, as a multiset, those of the runs.
bool SameLetters(std::span<const Exponent> target, std::span<const Word> runs);

}  // namespace jacquet

#endif  // JACQUET_WORD_COUNT_H_
