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

#ifndef JACQUET_SEG_CORE_H_
#define JACQUET_SEG_CORE_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jacquet {

// Exponent of nu on the fixed cuspidal line. Half-integers are stored doubled,
// so 3/2 is Exponent{3} and 1 is Exponent{2}.
class Exponent {
 public:
  constexpr Exponent() = default;

  static constexpr Exponent FromTwice(std::int64_t twice) {
    Exponent e;
    e.twice_ = twice;
    return e;
  }
  static constexpr Exponent Integer(std::int64_t k) { return FromTwice(2 * k); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool IsInteger() const { return twice_ % 2 == 0; }

  constexpr Exponent operator-() const { return FromTwice(-twice_); }
  constexpr Exponent operator+(Exponent o) const {
    return FromTwice(twice_ + o.twice_);
  }
  constexpr Exponent operator-(Exponent o) const {
    return FromTwice(twice_ - o.twice_);
  }
  // Shift by a whole number of steps along the line.
  constexpr Exponent Step(std::int64_t k) const {
    return FromTwice(twice_ + 2 * k);
  }
  constexpr Exponent Abs() const { return FromTwice(twice_ < 0 ? -twice_ : twice_); }

  constexpr auto operator<=>(const Exponent&) const = default;

  // "3/2", "-1/2", "2", "0".
  std::string ToString() const;
  // Accepts "k", "-k", "p/2"; throws std::invalid_argument otherwise.
  static Exponent Parse(std::string_view text);

 private:
  std::int64_t twice_ = 0;
};

// The context every computation is threaded through: one self-dual cuspidal
// rho, one classical cuspidal sigma, and the reducibility point alpha > 0.
class CuspidalContext {
 public:
  explicit CuspidalContext(Exponent alpha, std::string rho = "rho",
                           std::string sigma = "sigma");

  Exponent alpha() const { return alpha_; }
  const std::string& rho() const { return rho_; }
  const std::string& sigma() const { return sigma_; }

 private:
  Exponent alpha_;
  std::string rho_;
  std::string sigma_;
};

// A segment [lo, hi] with hi - lo a whole number >= -1. The value hi = lo - 1
// is the empty segment; all empty segments compare equal.
class Segment {
 public:
  // The empty segment (multiplicative unit).
  constexpr Segment() : lo_(Exponent::Integer(0)), hi_(Exponent::Integer(-1)) {}
  // Throws std::invalid_argument unless hi - lo is integral and >= -1.
  Segment(Exponent lo, Exponent hi);

  static Segment Empty() { return Segment(); }
  static Segment Point(Exponent x) { return Segment(x, x); }

  Exponent lo() const { return lo_; }
  Exponent hi() const { return hi_; }
  bool empty() const { return hi_ < lo_; }
  // Number of cuspidal points.
  std::int64_t Cardinality() const;
  // Four times the center (lo + hi) / 2; orders segments like the center.
  std::int64_t CenterKey() const { return lo_.twice() + hi_.twice(); }
  bool Contains(Exponent x) const { return !empty() && lo_ <= x && x <= hi_; }

  // hi, hi-1, ..., lo.
  std::vector<Exponent> DescendingWord() const;
  // lo, lo+1, ..., hi.
  std::vector<Exponent> AscendingWord() const;

  bool operator==(const Segment& o) const;
  std::strong_ordering operator<=>(const Segment& o) const;

  // "[lo,hi]" with fractions, "[]" for empty.
  std::string ToString() const;

 private:
  Exponent lo_;
  Exponent hi_;
};

// Finite multiset of non-empty segments, stored sorted by (lo, hi).
class Multisegment {
 public:
  Multisegment() = default;
  // Empty segments in the input are dropped.
  explicit Multisegment(std::vector<Segment> segs);
  Multisegment(std::initializer_list<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  // Total number of cuspidal points (the grading in R).
  std::int64_t Degree() const;

  Multisegment operator+(const Multisegment& o) const;
  // Contragredient: every segment negated.
  Multisegment Contragredient() const;
  // All cuspidal exponents with multiplicity, sorted.
  std::vector<Exponent> Support() const;

  bool operator==(const Multisegment& o) const = default;
  // Orders by degree first, then lexicographically on the sorted segments.
  std::strong_ordering operator<=>(const Multisegment& o) const;

  // "{[0,1],[2,2]}"; the empty multisegment prints as "1".
  std::string ToString() const;

 private:
  std::vector<Segment> segs_;
};

// A word of exponents; leftmost letter is the outermost Jacquet layer.
using Word = std::vector<Exponent>;

std::string WordToString(std::span<const Exponent> w);

// [lo, hi - 1]; the empty segment for a point. Throws on empty input.
Segment SegMinus(const Segment& d);

// True iff the union of the two segments is a segment different from both.
bool SegLinked(const Segment& d1, const Segment& d2);

// [lo, hi] -> [-hi, -lo].
Segment SegContragredient(const Segment& d);

// Union of two segments whose union is a segment (linked, juxtaposed, or
// nested). Throws std::invalid_argument otherwise.
Segment SegUnion(const Segment& d1, const Segment& d2);

// Sorts by decreasing center, ties by decreasing hi then decreasing lo. This
// is the order of the factors of a standard module.
std::vector<Segment> LanglandsSort(std::vector<Segment> segs);

}  // namespace jacquet

#endif  // JACQUET_SEG_CORE_H_
