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

#ifndef JACQUET_LINEAR_H_
#define JACQUET_LINEAR_H_

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace jacquet {

using Coefficient = boost::multiprecision::cpp_int;

struct NoTag {};

// Finite Z-linear combination of basis keys. Zero coefficients are never
// stored, and iteration follows the key order, so printing is canonical.
// The Tag parameter keeps combinations over the same key type apart (e.g.
// GL words versus classical words).
template <typename Key, typename Tag = NoTag>
class Combination {
 public:
  using key_type = Key;
  using Map = std::map<Key, Coefficient>;

  Combination() = default;
  explicit Combination(const Key& k, Coefficient c = 1) { Add(k, std::move(c)); }

  void Add(const Key& k, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coefficient Coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // Sum of all coefficients.
  Coefficient Mass() const {
    Coefficient m = 0;
    for (const auto& [k, c] : terms_) m += c;
    return m;
  }

  bool AllNonNegative() const {
    for (const auto& [k, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) Add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) Add(k, -c);
    return *this;
  }
  Combination& operator*=(const Coefficient& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) {
    return a += b;
  }
  friend Combination operator-(Combination a, const Combination& b) {
    return a -= b;
  }
  friend Combination operator*(const Coefficient& s, Combination a) {
    return a *= s;
  }
  Combination operator-() const {
    Combination out = *this;
    return out *= -1;
  }

  bool operator==(const Combination& o) const { return terms_ == o.terms_; }

  // True iff every coefficient of *this is <= the matching one in o.
  bool DominatedBy(const Combination& o) const {
    for (const auto& [k, c] : terms_) {
      if (c > o.Coeff(k)) return false;
    }
    for (const auto& [k, c] : o.terms_) {
      if (c < 0 && !terms_.contains(k)) return false;
    }
    return true;
  }

 private:
  Map terms_;
};

// "2*k1 - k2 + k3" with fmt rendering keys; "0" for the zero combination.
template <typename Comb, typename Fmt>
std::string FormatCombination(const Comb& x, Fmt fmt) {
  if (x.IsZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    Coefficient mag = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += fmt(k);
    first = false;
  }
  return out;
}

}  // namespace jacquet

#endif  // JACQUET_LINEAR_H_
