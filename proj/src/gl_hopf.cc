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

#include "jacquet/gl_hopf.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "jacquet/word_count.h"

namespace jacquet {
namespace {

constexpr std::size_t kDefaultMemoCapacity = 1 << 14;

std::size_t MemoCapacity() {
  static const std::size_t capacity = [] {
    const char* env = std::getenv("JACQUET_MEMO_CAPACITY");
    if (env == nullptr) return kDefaultMemoCapacity;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env) return kDefaultMemoCapacity;
    return static_cast<std::size_t>(v);
  }();
  return capacity;
}

// Thread-safe memo that stops inserting once full.
template <typename Key, typename Value>
class Memo {
 public:
  std::optional<Value> Find(const Key& k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void Store(const Key& k, const Value& v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() < MemoCapacity()) map_.emplace(k, v);
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> map_;
};

GLTensorElement TensorOf(const GLElement& x, const GLElement& y) {
  GLTensorElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.Add({a, b}, ca * cb);
  }
  return out;
}

// Adds every shuffle of u and v to `out` with weight c.
void ShuffleWords(const Word& u, const Word& v, const Coefficient& c,
                  WordSum& out) {
  Word w;
  w.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t j) {
    if (i == u.size() && j == v.size()) {
      out.Add(w, c);
      return;
    }
    if (i < u.size()) {
      w.push_back(u[i]);
      rec(i + 1, j);
      w.pop_back();
    }
    if (j < v.size()) {
      w.push_back(v[j]);
      rec(i, j + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
}

WordSum ComputeWordModel(const Multisegment& d) {
  WordSum acc{Word{}};
  for (const Segment& s : d.segments()) {
    acc = Shuffle(acc, WordSum{s.DescendingWord()});
  }
  return acc;
}

// Applies a ring map given on segments, multiplicatively.
GLElement ApplyOnSegments(const GLElement& x,
                          const std::function<GLElement(const Segment&)>& f) {
  GLElement out;
  for (const auto& [d, c] : x) {
    GLElement prod = GLOne();
    for (const Segment& s : d.segments()) prod = GLMul(prod, f(s));
    out += c * prod;
  }
  return out;
}

}  // namespace

GLElement GLOne() { return GLElement(Multisegment{}); }

GLElement GLBasis(const Multisegment& d) { return GLElement(d); }

GLElement GLDelta(const Segment& d) {
  return GLElement(Multisegment(std::vector<Segment>{d}));
}

GLElement GLMul(const GLElement& x, const GLElement& y) {
  GLElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.Add(a + b, ca * cb);
  }
  return out;
}

GLTensorElement TensorMul(const GLTensorElement& x, const GLTensorElement& y) {
  GLTensorElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      out.Add({a.first + b.first, a.second + b.second}, ca * cb);
    }
  }
  return out;
}

GLElement GLContragredient(const GLElement& x) {
  GLElement out;
  for (const auto& [d, c] : x) out.Add(d.Contragredient(), c);
  return out;
}

GLElement GradedComponent(const GLElement& x, std::int64_t degree) {
  GLElement out;
  for (const auto& [d, c] : x) {
    if (d.Degree() == degree) out.Add(d, c);
  }
  return out;
}

GLTensorElement ComultiplyDelta(const Segment& d) {
  GLTensorElement out;
  if (d.empty()) {
    out.Add({Multisegment{}, Multisegment{}}, 1);
    return out;
  }
  for (Exponent i = d.lo().Step(-1); i <= d.hi(); i = i.Step(1)) {
    out.Add({Multisegment{Segment(i.Step(1), d.hi())},
             Multisegment{Segment(d.lo(), i)}},
            1);
  }
  return out;
}

GLTensorElement ComultiplyZelevinskySegment(const Segment& d) {
  GLTensorElement out;
  if (d.empty()) {
    out.Add({Multisegment{}, Multisegment{}}, 1);
    return out;
  }
  for (Exponent i = d.lo().Step(-1); i <= d.hi(); i = i.Step(1)) {
    out += TensorOf(ExpandZelevinskySegment(Segment(d.lo(), i)),
                    ExpandZelevinskySegment(Segment(i.Step(1), d.hi())));
  }
  return out;
}

GLTensorElement Comultiply(const GLElement& x) {
  GLTensorElement out;
  for (const auto& [d, c] : x) {
    GLTensorElement prod;
    prod.Add({Multisegment{}, Multisegment{}}, 1);
    for (const Segment& s : d.segments()) prod = TensorMul(prod, ComultiplyDelta(s));
    out += c * prod;
  }
  return out;
}

GLTensorElement TwistedComultiply(const GLElement& x) {
  GLTensorElement out;
  for (const auto& [ab, c] : Comultiply(x)) {
    const auto& [a, b] = ab;
    const Multisegment b_dual = b.Contragredient();
    for (const auto& [split, c2] : Comultiply(GLBasis(a))) {
      out.Add({b_dual + split.first, split.second}, c * c2);
    }
  }
  return out;
}

GLTensorElement TwistedComultiplyClosedForm(const Segment& d) {
  GLTensorElement out;
  if (d.empty()) {
    out.Add({Multisegment{}, Multisegment{}}, 1);
    return out;
  }
  const Exponent a = d.lo();
  const Exponent c = d.hi();
  for (Exponent s = a.Step(-1); s <= c; s = s.Step(1)) {
    for (Exponent t = s; t <= c; t = t.Step(1)) {
      out.Add({Multisegment{Segment(-s, -a), Segment(t.Step(1), c)},
               Multisegment{Segment(s.Step(1), t)}},
              1);
    }
  }
  return out;
}

GLElement TwistedGLPart(const GLElement& x) {
  GLElement out;
  for (const auto& [ab, c] : TwistedComultiply(x)) {
    if (ab.second.empty()) out.Add(ab.first, c);
  }
  return out;
}

GLElement Derivative(const GLElement& x) {
  return ApplyOnSegments(x, [](const Segment& s) {
    return GLDelta(s) + GLDelta(SegMinus(s));
  });
}

namespace {

GLElement LowestComponent(const GLElement& x) {
  if (x.IsZero()) return x;
  std::int64_t lowest = x.begin()->first.Degree();
  for (const auto& [d, c] : x) lowest = std::min(lowest, d.Degree());
  return GradedComponent(x, lowest);
}

}  // namespace

GLElement HighestDerivative(const GLElement& x) {
  return LowestComponent(Derivative(x));
}

GLElement ZelevinskyDerivative(const GLElement& x) {
  return Involution(Derivative(Involution(x)));
}

GLElement ZelevinskyHighestDerivative(const GLElement& x) {
  return LowestComponent(ZelevinskyDerivative(x));
}

WordSum Shuffle(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) ShuffleWords(u, v, cu * cv, out);
  }
  return out;
}

WordSum WordModel(const Multisegment& d) {
  static Memo<Multisegment, WordSum> memo;
  if (auto hit = memo.Find(d)) return *hit;
  WordSum w = ComputeWordModel(d);
  memo.Store(d, w);
  return w;
}

WordSum WordModel(const GLElement& x) {
  WordSum out;
  for (const auto& [d, c] : x) out += c * WordModel(d);
  return out;
}

std::vector<Multisegment> ConsecutiveRefinements(const Segment& d) {
  std::vector<Multisegment> out;
  if (d.empty()) {
    out.emplace_back();
    return out;
  }
  const std::int64_t n = d.Cardinality();
  // Bit i set means a cut between lo+i and lo+i+1.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<Segment> pieces;
    Exponent start = d.lo();
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        pieces.emplace_back(start, d.lo().Step(i));
        start = d.lo().Step(i + 1);
      }
    }
    pieces.emplace_back(start, d.hi());
    out.emplace_back(std::move(pieces));
  }
  return out;
}

GLElement ExpandZelevinskySegment(const Segment& d) {
  static Memo<std::pair<Exponent, Exponent>, GLElement> memo;
  if (d.empty()) return GLOne();
  const auto key = std::make_pair(d.lo(), d.hi());
  if (auto hit = memo.Find(key)) return *hit;

  std::vector<Multisegment> comps = ConsecutiveRefinements(d);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const Multisegment& a, const Multisegment& b) {
                     return a.size() > b.size();
                   });
  auto leading = [](const Multisegment& m) {
    Word w;
    for (const Segment& s : m.segments()) {
      const Word piece = s.DescendingWord();
      w.insert(w.end(), piece.begin(), piece.end());
    }
    return w;
  };
  auto runs = [](const Multisegment& m) {
    std::vector<Word> r;
    for (const Segment& s : m.segments()) r.push_back(s.DescendingWord());
    return r;
  };

  GLElement result;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Word lead = leading(comps[i]);
    Coefficient target = (i == 0) ? 1 : 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Coefficient cj = result.Coeff(comps[j]);
      if (cj == 0) continue;
      const std::vector<Word> rj = runs(comps[j]);
      target -= cj * CountInterleavings(lead, rj);
    }
    result.Add(comps[i], target);
  }

  if (!(WordModel(result) == WordSum(d.AscendingWord()))) {
    throw std::logic_error("Zelevinsky expansion of " + d.ToString() +
                           " does not reduce to its ascending word");
  }
  memo.Store(key, result);
  return result;
}

GLElement ZelevinskyProduct(const std::vector<Segment>& segs) {
  GLElement prod = GLOne();
  for (const Segment& s : segs) prod = GLMul(prod, ExpandZelevinskySegment(s));
  return prod;
}

GLElement Involution(const GLElement& x) {
  return ApplyOnSegments(
      x, [](const Segment& s) { return ExpandZelevinskySegment(s); });
}

Multisegment MoeglinWaldspurgerDual(const Multisegment& a) {
  std::vector<Segment> rest = a.segments();
  std::vector<Segment> out;
  while (!rest.empty()) {
    // Start from a shortest segment among those with the largest end.
    std::size_t pick = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (rest[i].hi() > rest[pick].hi() ||
          (rest[i].hi() == rest[pick].hi() && rest[i].lo() > rest[pick].lo())) {
        pick = i;
      }
    }
    std::vector<std::size_t> chain{pick};
    const Exponent top = rest[pick].hi();
    Exponent end = top;
    Exponent begin = rest[pick].lo();
    while (true) {
      // Next: ends one step lower, begins strictly earlier, shortest such.
      std::optional<std::size_t> next;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (std::find(chain.begin(), chain.end(), i) != chain.end()) continue;
        if (rest[i].hi() != end.Step(-1) || !(rest[i].lo() < begin)) continue;
        if (!next || rest[i].lo() > rest[*next].lo()) next = i;
      }
      if (!next) break;
      chain.push_back(*next);
      end = rest[*next].hi();
      begin = rest[*next].lo();
    }
    out.emplace_back(end, top);
    std::vector<Segment> remaining;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const bool used = std::find(chain.begin(), chain.end(), i) != chain.end();
      if (!used) {
        remaining.push_back(rest[i]);
      } else if (rest[i].Cardinality() > 1) {
        remaining.push_back(SegMinus(rest[i]));
      }
    }
    rest = std::move(remaining);
  }
  return Multisegment(std::move(out));
}

std::string ToString(const GLElement& x) {
  return FormatCombination(x, [](const Multisegment& d) { return d.ToString(); });
}

std::string ToString(const GLTensorElement& x) {
  return FormatCombination(x, [](const std::pair<Multisegment, Multisegment>& ab) {
    return ab.first.ToString() + " (x) " + ab.second.ToString();
  });
}

std::string ToString(const WordSum& x) {
  return FormatCombination(x, [](const Word& w) { return WordToString(w); });
}

}  // namespace jacquet
