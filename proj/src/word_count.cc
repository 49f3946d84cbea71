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

#include "jacquet/word_count.h"

#include <algorithm>
#include <cstdint>
#include <map>

namespace jacquet {

bool SameLetters(std::span<const Exponent> target, std::span<const Word> runs) {
  std::vector<Exponent> a(target.begin(), target.end());
  std::vector<Exponent> b;
  for (const Word& r : runs) b.insert(b.end(), r.begin(), r.end());
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Coefficient CountInterleavings(std::span<const Exponent> target,
                               std::span<const Word> runs) {
  if (!SameLetters(target, runs)) return 0;
  // Layered DP over the vector of positions reached in each run.
  using State = std::vector<std::uint16_t>;
  std::map<State, Coefficient> layer;
  layer.emplace(State(runs.size(), 0), 1);
  for (const Exponent letter : target) {
    std::map<State, Coefficient> next;
    for (const auto& [state, count] : layer) {
      for (std::size_t i = 0; i < runs.size(); ++i) {
        if (state[i] < runs[i].size() && runs[i][state[i]] == letter) {
          State moved = state;
          ++moved[i];
          next[moved] += count;
        }
      }
    }
    if (next.empty()) return 0;
    layer = std::move(next);
  }
  Coefficient total = 0;
  for (const auto& [state, count] : layer) total += count;
  return total;
}

}  // namespace jacquet
