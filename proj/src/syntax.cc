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

#include "jacquet/syntax.h"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace jacquet {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool StartsWith(std::string_view s) {
    SkipSpace();
    return text_.substr(pos_).starts_with(s);
  }
  bool Accept(std::string_view s) {
    if (!StartsWith(s)) return false;
    pos_ += s.size();
    return true;
  }
  void Expect(std::string_view s) {
    if (!Accept(s)) Fail("expected '" + std::string(s) + "'");
  }
  void ExpectEnd() {
    if (!AtEnd()) Fail("unexpected trailing input");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  // Characters that can make up an exponent: sign, digits, '/'.
  Exponent ReadExponent() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
            text_[pos_] == '+' || text_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected an exponent");
    try {
      return Exponent::Parse(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      Fail(e.what());
    }
  }

  std::int64_t ReadInteger() {
    SkipSpace();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      Fail("expected an integer");
    }
    return v;
  }

  Segment ReadSegment() {
    Expect("[");
    if (Accept("]")) return Segment();
    const Exponent lo = ReadExponent();
    Exponent hi = lo;
    if (Accept(",")) hi = ReadExponent();
    Expect("]");
    try {
      return Segment(lo, hi);
    } catch (const std::invalid_argument& e) {
      Fail(e.what());
    }
  }

  // Comma separated segments up to (not including) `stop`.
  std::vector<Segment> ReadSegmentList(char stop) {
    std::vector<Segment> out;
    if (Peek() == stop) return out;
    do {
      out.push_back(ReadSegment());
    } while (Accept(","));
    return out;
  }

  PMSign ReadSign(bool* pair) {
    *pair = false;
    if (Accept("+-")) {
      *pair = true;
      return PMSign::kPlus;
    }
    if (Accept("+")) return PMSign::kPlus;
    if (Accept("-")) return PMSign::kMinus;
    Fail("expected '+', '-' or '+-'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GLElement ParseExpr(Cursor& c);

GLElement ParseFactor(Cursor& c) {
  if (c.Accept("d")) return GLDelta(c.ReadSegment());
  if (c.Accept("s")) return ExpandZelevinskySegment(c.ReadSegment());
  if (c.Accept("t(")) {
    GLElement inner = ParseExpr(c);
    c.Expect(")");
    return Involution(inner);
  }
  if (c.Accept("(")) {
    GLElement inner = ParseExpr(c);
    c.Expect(")");
    return inner;
  }
  if (c.Accept("{")) {
    std::vector<Segment> segs = c.ReadSegmentList('}');
    c.Expect("}");
    return GLBasis(Multisegment(std::move(segs)));
  }
  c.Fail("expected d[..], s[..], t(..), {..} or (..)");
}

bool StartsFactor(Cursor& c) {
  const char p = c.Peek();
  return p == 'd' || p == 's' || p == 't' || p == '(' || p == '{';
}

GLElement ParseTerm(Cursor& c) {
  Coefficient scale = 1;
  GLElement acc = GLOne();
  bool have_factor = false;
  if (std::isdigit(static_cast<unsigned char>(c.Peek()))) {
    scale = c.ReadInteger();
    if (!c.Accept("*")) c.Accept("x");
    if (!StartsFactor(c)) return scale * GLOne();
  }
  do {
    acc = have_factor ? GLMul(acc, ParseFactor(c)) : ParseFactor(c);
    have_factor = true;
  } while (c.Accept("x"));
  return scale * acc;
}

GLElement ParseExpr(Cursor& c) {
  GLElement out;
  bool negative = c.Accept("-");
  if (!negative) c.Accept("+");
  while (true) {
    GLElement term = ParseTerm(c);
    out += negative ? -term : term;
    if (c.Accept("+")) {
      negative = false;
    } else if (c.Accept("-")) {
      negative = true;
    } else {
      return out;
    }
  }
}

ParsedTempered ReadTempered(Cursor& c, const CuspidalContext& ctx) {
  ParsedTempered out;
  if (c.Accept("sigma")) return out;
  if (c.Accept("st(")) {
    out.symbol = TemperedSymbol::GenSteinberg(c.ReadInteger());
    c.Expect(")");
  } else if (c.Accept("dst(")) {
    out.symbol = TemperedSymbol::DualSteinberg(c.ReadInteger());
    c.Expect(")");
  } else if (c.Accept("tau(")) {
    Segment du(-ctx.alpha(), ctx.alpha());
    if (c.Peek() == '[') {
      du = c.ReadSegment();
      c.Expect(",");
    }
    const PMSign s = c.ReadSign(&out.pair);
    c.Expect(")");
    out.symbol = TemperedSymbol::TauPM(du, s);
  } else if (c.Accept("dpm(")) {
    const Segment d = c.ReadSegment();
    c.Expect(",");
    const PMSign s = c.ReadSign(&out.pair);
    c.Expect(")");
    out.symbol = TemperedSymbol::DeltaPM(d, s);
  } else {
    c.Fail("expected a tempered symbol");
  }
  ValidateTempered(out.symbol, ctx);
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Segment ParseSegment(std::string_view text) {
  Cursor c(text);
  Segment s = c.ReadSegment();
  c.ExpectEnd();
  return s;
}

Word ParseWord(std::string_view text) {
  Cursor c(text);
  const bool parens = c.Accept("(");
  Word w;
  if (!(parens ? c.Peek() == ')' : c.AtEnd())) {
    do {
      w.push_back(c.ReadExponent());
    } while (c.Accept(","));
  }
  if (parens) c.Expect(")");
  c.ExpectEnd();
  return w;
}

GLElement ParseGLExpression(std::string_view text) {
  Cursor c(text);
  GLElement out = ParseExpr(c);
  c.ExpectEnd();
  return out;
}

ParsedTempered ParseTempered(std::string_view text, const CuspidalContext& ctx) {
  Cursor c(text);
  ParsedTempered out = ReadTempered(c, ctx);
  c.ExpectEnd();
  return out;
}

ParsedClassical ParseClassical(std::string_view text, const CuspidalContext& ctx) {
  const auto bar = text.find("|x");
  const std::string_view gl_text = bar == std::string_view::npos ? "" : Trim(text.substr(0, bar));
  const std::string_view temp_text =
      bar == std::string_view::npos ? text : text.substr(bar + 2);
  const GLElement gl = gl_text.empty() ? GLOne() : ParseGLExpression(gl_text);
  const ParsedTempered t = ParseTempered(temp_text, ctx);
  ParsedClassical out;
  out.element = Rtimes(gl, ClassicalBasisElement(Multisegment{}, t.symbol));
  out.pair = t.pair;
  out.pair_symbol = t.symbol;
  return out;
}

SubquotientParam ParseParam(std::string_view text, const CuspidalContext& ctx) {
  Cursor c(text);
  SubquotientParam p;
  if (c.Accept("d(")) {
    p.tail = c.ReadSegment();
    c.Expect(";");
    c.Expect("sigma");
    c.Expect(")");
  } else {
    c.Expect("L(");
    p.segs = c.ReadSegmentList(';');
    c.Expect(";");
    if (c.Accept("d(")) {
      p.tail = c.ReadSegment();
      c.Expect(";");
      c.Expect("sigma");
      c.Expect(")");
    } else {
      c.Expect("sigma");
    }
    c.Expect(")");
  }
  c.ExpectEnd();

  // Must be one of the enumerated parameters of its ladder.
  const std::int64_t n = LadderLength(p);
  if (n < 0) c.Fail("empty parameter");
  for (const SubquotientParam& q : SubquotientEnumerate(n, ctx)) {
    if (q == p) return p;
  }
  throw std::invalid_argument("'" + std::string(text) +
                              "' is not a decreasing partition of the ladder "
                              "starting at alpha = " + ctx.alpha().ToString());
}

std::vector<Exponent> ParseExponentList(std::string_view text) {
  Cursor c(text);
  std::vector<Exponent> out;
  if (c.AtEnd()) return out;
  do {
    out.push_back(c.ReadExponent());
  } while (c.Accept(","));
  c.ExpectEnd();
  return out;
}

std::vector<std::int64_t> ParseIntList(std::string_view text) {
  Cursor c(text);
  std::vector<std::int64_t> out;
  if (c.AtEnd()) return out;
  do {
    out.push_back(c.ReadInteger());
  } while (c.Accept(","));
  c.ExpectEnd();
  return out;
}

}  // namespace jacquet
