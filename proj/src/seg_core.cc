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

#include "jacquet/seg_core.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace jacquet {
namespace {

std::int64_t ParseInt(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string Exponent::ToString() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Exponent Exponent::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Integer(ParseInt(text));
  const std::int64_t num = ParseInt(text.substr(0, slash));
  const std::int64_t den = ParseInt(text.substr(slash + 1));
  if (den == 1) return Integer(num);
  if (den != 2) {
    throw std::invalid_argument("exponent '" + std::string(text) +
                                "' is not a half-integer");
  }
  return FromTwice(num);
}

CuspidalContext::CuspidalContext(Exponent alpha, std::string rho,
                                 std::string sigma)
    : alpha_(alpha), rho_(std::move(rho)), sigma_(std::move(sigma)) {
  if (alpha.twice() <= 0) {
    throw std::invalid_argument("reducibility point must be positive, got " +
                                alpha.ToString());
  }
}

Segment::Segment(Exponent lo, Exponent hi) : lo_(lo), hi_(hi) {
  const std::int64_t diff = hi.twice() - lo.twice();
  if (diff % 2 != 0 || diff < -2) {
    throw std::invalid_argument("[" + lo.ToString() + "," + hi.ToString() +
                                "] is not a segment");
  }
  if (diff == -2) *this = Segment();
}

std::int64_t Segment::Cardinality() const {
  return (hi_.twice() - lo_.twice()) / 2 + 1;
}

std::vector<Exponent> Segment::DescendingWord() const {
  std::vector<Exponent> w;
  if (empty()) return w;
  w.reserve(Cardinality());
  for (Exponent x = hi_; x >= lo_; x = x.Step(-1)) w.push_back(x);
  return w;
}

std::vector<Exponent> Segment::AscendingWord() const {
  std::vector<Exponent> w = DescendingWord();
  std::reverse(w.begin(), w.end());
  return w;
}

bool Segment::operator==(const Segment& o) const {
  if (empty() || o.empty()) return empty() == o.empty();
  return lo_ == o.lo_ && hi_ == o.hi_;
}

std::strong_ordering Segment::operator<=>(const Segment& o) const {
  if (empty() || o.empty()) {
    return o.empty() <=> empty();  // empty sorts first
  }
  if (auto c = lo_ <=> o.lo_; c != 0) return c;
  return hi_ <=> o.hi_;
}

std::string Segment::ToString() const {
  if (empty()) return "[]";
  return "[" + lo_.ToString() + "," + hi_.ToString() + "]";
}

Multisegment::Multisegment(std::vector<Segment> segs) {
  segs_.reserve(segs.size());
  for (const Segment& s : segs) {
    if (!s.empty()) segs_.push_back(s);
  }
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(std::initializer_list<Segment> segs)
    : Multisegment(std::vector<Segment>(segs)) {}

std::int64_t Multisegment::Degree() const {
  std::int64_t d = 0;
  for (const Segment& s : segs_) d += s.Cardinality();
  return d;
}

Multisegment Multisegment::operator+(const Multisegment& o) const {
  Multisegment out;
  out.segs_.reserve(segs_.size() + o.segs_.size());
  std::merge(segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end(),
             std::back_inserter(out.segs_));
  return out;
}

Multisegment Multisegment::Contragredient() const {
  std::vector<Segment> out;
  out.reserve(segs_.size());
  for (const Segment& s : segs_) out.push_back(SegContragredient(s));
  return Multisegment(std::move(out));
}

std::vector<Exponent> Multisegment::Support() const {
  std::vector<Exponent> out;
  for (const Segment& s : segs_) {
    for (Exponent x : s.AscendingWord()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering Multisegment::operator<=>(const Multisegment& o) const {
  if (auto c = Degree() <=> o.Degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end());
}

std::string Multisegment::ToString() const {
  if (segs_.empty()) return "1";
  std::string out = "{";
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += ",";
    out += segs_[i].ToString();
  }
  return out + "}";
}

std::string WordToString(std::span<const Exponent> w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].ToString();
  }
  return out + ")";
}

Segment SegMinus(const Segment& d) {
  if (d.empty()) throw std::invalid_argument("SegMinus of the empty segment");
  return Segment(d.lo(), d.hi().Step(-1));
}

bool SegLinked(const Segment& d1, const Segment& d2) {
  if (d1.empty() || d2.empty()) return false;
  // The union is a segment iff the two overlap or are juxtaposed.
  const bool unites = d1.lo() <= d2.hi().Step(1) && d2.lo() <= d1.hi().Step(1);
  if (!unites) return false;
  if ((d1.hi() - d2.hi()).twice() % 2 != 0) return false;  // different lines
  const Exponent lo = std::min(d1.lo(), d2.lo());
  const Exponent hi = std::max(d1.hi(), d2.hi());
  const Segment u(lo, hi);
  return u != d1 && u != d2;
}

Segment SegContragredient(const Segment& d) {
  if (d.empty()) return d;
  return Segment(-d.hi(), -d.lo());
}

Segment SegUnion(const Segment& d1, const Segment& d2) {
  if (d1.empty()) return d2;
  if (d2.empty()) return d1;
  const bool unites = d1.lo() <= d2.hi().Step(1) && d2.lo() <= d1.hi().Step(1);
  if (!unites || (d1.hi() - d2.hi()).twice() % 2 != 0) {
    throw std::invalid_argument("union of " + d1.ToString() + " and " +
                                d2.ToString() + " is not a segment");
  }
  return Segment(std::min(d1.lo(), d2.lo()), std::max(d1.hi(), d2.hi()));
}

std::vector<Segment> LanglandsSort(std::vector<Segment> segs) {
  for (const Segment& s : segs) {
    if (s.empty()) {
      throw std::invalid_argument("LanglandsSort: empty segment in input");
    }
  }
  std::stable_sort(segs.begin(), segs.end(),
                   [](const Segment& a, const Segment& b) {
                     if (a.CenterKey() != b.CenterKey()) {
                       return a.CenterKey() > b.CenterKey();
                     }
                     if (a.hi() != b.hi()) return a.hi() > b.hi();
                     return a.lo() > b.lo();
                   });
  return segs;
}

}  // namespace jacquet
