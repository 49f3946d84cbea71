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

#include "jacquet/regular_regions.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jacquet {
namespace {

// Segment index of every letter; rejects repeated letters.
std::map<Exponent, std::size_t> LetterOwners(const Multisegment& d) {
  std::map<Exponent, std::size_t> owner;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const Exponent e : d.segments()[i].AscendingWord()) {
      if (!owner.emplace(e, i).second) {
        throw std::invalid_argument("support of " + d.ToString() +
                                    " repeats " + e.ToString());
      }
    }
  }
  return owner;
}

// Keeps permutations where x+1 precedes x iff they share a segment
// (reversed when `zelevinsky`).
WordSum RegularWords(const Multisegment& d, bool zelevinsky) {
  const auto owner = LetterOwners(d);
  Word letters;
  for (const auto& [e, i] : owner) letters.push_back(e);
  WordSum out;
  do {
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < letters.size(); ++i) pos[letters[i]] = i;
    bool ok = true;
    for (const auto& [x, seg] : owner) {
      auto next = owner.find(x.Step(1));
      if (next == owner.end()) continue;
      const bool same = next->second == seg;
      const bool up_first = pos[x.Step(1)] < pos[x];
      if (same != zelevinsky ? !up_first : up_first) {
        ok = false;
        break;
      }
    }
    if (ok) out.Add(letters, 1);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

struct LadderKey {
  std::int64_t alpha_twice;
  std::int64_t n;
  auto operator<=>(const LadderKey&) const = default;
};

const std::map<Region, ClassicalWordSum>& RegionsOfLadder(std::int64_t n,
                                                          const CuspidalContext& ctx) {
  static std::mutex mu;
  static std::map<LadderKey, std::map<Region, ClassicalWordSum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(LadderKey{ctx.alpha().twice(), n});
  if (!inserted) return it->second;

  Word ladder;
  for (std::int64_t j = 0; j <= n; ++j) ladder.push_back(ctx.alpha().Step(j));
  do {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << ladder.size()); ++signs) {
      Word w = ladder;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (signs & (std::uint64_t{1} << i)) w[i] = -w[i];
      }
      it->second[ClassicalRegion(w, ctx)].Add(w, 1);
    }
  } while (std::next_permutation(ladder.begin(), ladder.end()));
  return it->second;
}

}  // namespace

WordSum RegularLWords(const Multisegment& d) { return RegularWords(d, false); }

WordSum RegularZWords(const Multisegment& d) { return RegularWords(d, true); }

Word RegularLWord(const Multisegment& d) {
  Word w;
  for (const Segment& s : d.segments()) {
    const Word piece = s.DescendingWord();
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return w;
}

Word RegularZWord(const Multisegment& d) {
  Word w;
  for (auto it = d.segments().rbegin(); it != d.segments().rend(); ++it) {
    const Word piece = it->AscendingWord();
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return w;
}

Region ClassicalRegion(const Word& w, const CuspidalContext& ctx) {
  const std::size_t len = w.size();
  std::vector<std::size_t> pos(len, len);
  std::vector<bool> positive(len, false);
  for (std::size_t i = 0; i < len; ++i) {
    const Exponent rel = w[i].Abs() - ctx.alpha();
    const std::int64_t j = rel.twice() / 2;
    if (!rel.IsInteger() || j < 0 || j >= static_cast<std::int64_t>(len) ||
        pos[j] != len) {
      throw std::invalid_argument("word " + WordToString(w) +
                                  " is not a signed ladder permutation");
    }
    pos[j] = i;
    positive[j] = w[i].twice() > 0;
  }
  Region r(len, false);
  if (len == 0) return r;
  r[0] = positive[0];
  for (std::size_t j = 0; j + 1 < len; ++j) {
    r[j + 1] = pos[j + 1] < pos[j] ? positive[j + 1] : !positive[j];
  }
  return r;
}

Region ParamRegion(const SubquotientParam& p, const CuspidalContext& ctx) {
  return ClassicalRegion(DetectionWord(ToDatum(p, ctx), ctx), ctx);
}

ClassicalWordSum RegionWords(const Region& r, std::int64_t n,
                             const CuspidalContext& ctx) {
  const auto& regions = RegionsOfLadder(n, ctx);
  auto it = regions.find(r);
  return it == regions.end() ? ClassicalWordSum() : it->second;
}

SubquotientParam AubertDual(const SubquotientParam& p,
                            const CuspidalContext& ctx) {
  Region target = ParamRegion(p, ctx);
  target.flip();
  const std::int64_t n = LadderLength(p);
  std::vector<SubquotientParam> hits;
  for (const SubquotientParam& q : SubquotientEnumerate(n, ctx)) {
    if (ParamRegion(q, ctx) == target) hits.push_back(q);
  }
  if (hits.size() != 1) {
    throw std::logic_error("Aubert dual of " + p.ToString() + " matched " +
                           std::to_string(hits.size()) + " parameters");
  }
  return hits.front();
}

Word Negate(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Exponent e : w) out.push_back(-e);
  return out;
}

}  // namespace jacquet
