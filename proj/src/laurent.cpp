// Copyright 2026 The knotkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "knotkit/laurent.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

LaurentPoly2 LaurentPoly2::constant(const Integer& c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(const Integer& c, int v_exp, int z_exp) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.emplace(Monomial{v_exp, z_exp}, c);
  return p;
}

Integer LaurentPoly2::coefficient(int v_exp, int z_exp) const {
  auto it = terms_.find(Monomial{v_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly2::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly2::add_scaled(const LaurentPoly2& other, const Integer& c, int v_exp,
                              int z_exp) {
  if (c == 0) return;
  if (&other == this) {
    LaurentPoly2 copy = other;
    add_scaled(copy, c, v_exp, z_exp);
    return;
  }
  for (const auto& [m, coeff] : other.terms_) {
    add_term(Monomial{m.v + v_exp, m.z + z_exp}, coeff * c);
  }
}

LaurentPoly2 LaurentPoly2::scaled(const Integer& c, int v_exp, int z_exp) const {
  LaurentPoly2 out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m.v + v_exp, m.z + z_exp}, coeff * c);
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  add_scaled(rhs, 1, 0, 0);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  add_scaled(rhs, -1, 0, 0);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const { return scaled(-1, 0, 0); }

LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
  LaurentPoly2 out;
  for (const auto& [m, c] : rhs.terms_) out.add_scaled(lhs, c, m.v, m.z);
  return out;
}

namespace {

void append_factor(std::ostringstream& os, bool& first, char var, int exp) {
  if (exp == 0) return;
  if (!first) os << '*';
  first = false;
  os << var;
  if (exp != 1) os << '^' << exp;
}

}  // namespace

std::string canonical_text(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (leading) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    leading = false;
    bool first = true;
    if (magnitude != 1 || (m.v == 0 && m.z == 0)) {
      os << magnitude;
      first = false;
    }
    append_factor(os, first, 'v', m.v);
    append_factor(os, first, 'z', m.z);
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly2 parse() {
    LaurentPoly2 result;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      result += term().scaled(sign, 0, 0);
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return result;
  }

 private:
  LaurentPoly2 term() {
    Integer c = 1;
    Monomial m;
    bool any = false;
    while (true) {
      skip();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= digits();
      } else if (ch == 'v' || ch == 'z') {
        ++pos_;
        int exp = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          exp = signed_int();
        }
        (ch == 'v' ? m.v : m.z) += exp;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      any = true;
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (!any) throw ParseError("expected a term", pos_);
    return LaurentPoly2::monomial(c, m.v, m.z);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int signed_int() {
    skip();
    const char* begin = text_.data() + pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an exponent", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace knotkit
