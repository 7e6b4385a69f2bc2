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

#include "knotkit/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

ArtinWord::ArtinWord(std::vector<int> letters, int strands)
    : letters_(std::move(letters)), strands_(strands) {
  if (strands_ < 1) throw DomainError("braid needs at least one strand");
  for (int x : letters_) {
    if (x == 0) throw DomainError("Artin letter 0 is not a generator");
    if (std::abs(x) >= strands_) {
      throw DomainError("letter " + std::to_string(x) + " needs more than " +
                        std::to_string(strands_) + " strands");
    }
  }
}

BklWord::BklWord(std::vector<BandLetter> letters, int strands)
    : letters_(std::move(letters)), strands_(strands) {
  if (strands_ < 1) throw DomainError("braid needs at least one strand");
  for (const auto& a : letters_) {
    if (a.i < 1 || a.i >= a.j || a.j > strands_) {
      throw DomainError("band generator a(" + std::to_string(a.i) + "," + std::to_string(a.j) +
                        ") is out of range on " + std::to_string(strands_) + " strands");
    }
    if (a.sign != 1 && a.sign != -1) throw DomainError("band exponent must be +1 or -1");
  }
}

ArtinWord torus_knot_braid_word(int p, int q) {
  if (p < 1 || q < 1) {
    throw DomainError("torus knot parameters must be positive, got (" + std::to_string(p) +
                      ", " + std::to_string(q) + ")");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int rep = 0; rep < q; ++rep) {
    for (int i = 1; i < p; ++i) letters.push_back(i);
  }
  return ArtinWord(std::move(letters), p);
}

int writhe(const ArtinWord& w) {
  int total = 0;
  for (int x : w.letters()) total += x > 0 ? 1 : -1;
  return total;
}

int writhe(const BklWord& w) {
  int total = 0;
  for (const auto& a : w.letters()) total += a.sign;
  return total;
}

ArtinWord concat(const ArtinWord& a, const ArtinWord& b) {
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return ArtinWord(std::move(letters), std::max(a.strands(), b.strands()));
}

BklWord concat(const BklWord& a, const BklWord& b) {
  std::vector<BandLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BklWord(std::move(letters), std::max(a.strands(), b.strands()));
}

ArtinWord cable_word(const ArtinWord& w, int k, int l) {
  if (k < 1) throw DomainError("cable multiplicity k must be >= 1, got " + std::to_string(k));
  std::vector<int> out;
  for (int letter : w.letters()) {
    const int a = std::abs(letter);
    const int sign = letter > 0 ? 1 : -1;
    for (int t = 0; t < k; ++t) {
      for (int g = k * a + t; g > k * (a - 1) + t; --g) out.push_back(sign * g);
    }
  }
  const long long tail = static_cast<long long>(l) - static_cast<long long>(k) * writhe(w);
  if (tail < 0) {
    for (long long rep = 0; rep < -tail; ++rep) {
      for (int g = 1; g <= k - 1; ++g) out.push_back(-g);
    }
  } else {
    for (long long rep = 0; rep < tail; ++rep) {
      for (int g = 1; g <= k - 1; ++g) out.push_back(g);
    }
  }
  return ArtinWord(std::move(out), k * w.strands());
}

Permutation word_permutation(const ArtinWord& w) {
  Permutation p(w.strands());
  for (int x : w.letters()) {
    const int i = std::abs(x);
    p = p * Permutation::transposition(w.strands(), Transposition(i, i + 1));
  }
  return p;
}

Permutation word_permutation(const BklWord& w) {
  Permutation p(w.strands());
  for (const auto& a : w.letters()) {
    p = p * Permutation::transposition(w.strands(), Transposition(a.i, a.j));
  }
  return p;
}

BklWord bkl_shift(const BklWord& w, int offset, int new_strands) {
  if (offset < 0) throw DomainError("shift offset must be non-negative");
  std::vector<BandLetter> out;
  out.reserve(w.size());
  for (const auto& a : w.letters()) {
    if (a.j + offset > new_strands) {
      throw DomainError("shifted generator a(" + std::to_string(a.i + offset) + "," +
                        std::to_string(a.j + offset) + ") exceeds " +
                        std::to_string(new_strands) + " strands");
    }
    out.push_back({a.i + offset, a.j + offset, a.sign});
  }
  return BklWord(std::move(out), new_strands);
}

ArtinWord bkl_to_artin(const BklWord& w) {
  std::vector<int> out;
  for (const auto& a : w.letters()) {
    for (int g = a.j - 1; g > a.i; --g) out.push_back(g);
    out.push_back(a.sign * a.i);
    for (int g = a.i + 1; g < a.j; ++g) out.push_back(-g);
  }
  return ArtinWord(std::move(out), w.strands());
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!consume(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }
  int integer() {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (pos_ < text_.size() && text_[pos_] == '+') ++begin;
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an integer", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<int> strands_header(Cursor& in) {
  if (!in.consume("strands")) return std::nullopt;
  in.expect("=");
  const int n = in.integer();
  in.expect(";");
  if (n < 1) throw ParseError("strand count must be positive", in.pos());
  return n;
}

}  // namespace

ArtinWord parse_artin(std::string_view text) {
  Cursor in(text);
  const auto header = strands_header(in);
  std::vector<int> letters;
  int widest = 0;
  while (!in.done()) {
    const std::size_t at = in.pos();
    const int x = in.integer();
    if (x == 0) throw ParseError("Artin letters must be nonzero", at);
    widest = std::max(widest, std::abs(x));
    letters.push_back(x);
  }
  const int strands = header.value_or(widest + 1);
  if (widest >= strands) {
    throw ParseError("letter " + std::to_string(widest) + " does not fit on " +
                     std::to_string(strands) + " strands");
  }
  return ArtinWord(std::move(letters), strands);
}

BklWord parse_bkl(std::string_view text) {
  Cursor in(text);
  const auto header = strands_header(in);
  std::vector<BandLetter> letters;
  int widest = 1;
  while (!in.done()) {
    const std::size_t at = in.pos();
    const char c = in.peek();
    int sign = 0;
    if (c == 'a') sign = 1;
    if (c == 'A') sign = -1;
    if (sign == 0) throw ParseError("expected a(i,j) or A(i,j)", at);
    in.expect(c == 'a' ? "a" : "A");
    in.expect("(");
    const int i = in.integer();
    in.expect(",");
    const int j = in.integer();
    in.expect(")");
    if (i < 1 || j <= i) throw ParseError("band generator needs 1 <= i < j", at);
    widest = std::max(widest, j);
    letters.push_back({i, j, sign});
  }
  const int strands = header.value_or(widest);
  if (widest > strands) {
    throw ParseError("band index " + std::to_string(widest) + " does not fit on " +
                     std::to_string(strands) + " strands");
  }
  return BklWord(std::move(letters), strands);
}

std::string format_artin(const ArtinWord& w) {
  std::ostringstream os;
  int widest = 0;
  for (int x : w.letters()) widest = std::max(widest, std::abs(x));
  if (w.strands() != widest + 1) os << "strands=" << w.strands() << "; ";
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w.letters()[k];
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string format_bkl(const BklWord& w) {
  std::ostringstream os;
  int widest = 1;
  for (const auto& a : w.letters()) widest = std::max(widest, a.j);
  if (w.strands() != widest) os << "strands=" << w.strands() << "; ";
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& a = w.letters()[k];
    os << (k ? " " : "") << (a.sign > 0 ? 'a' : 'A') << '(' << a.i << ',' << a.j << ')';
  }
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace knotkit
