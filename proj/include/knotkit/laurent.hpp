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

#pragma once

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotkit {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of v^v * z^z.
struct Monomial {
  int v = 0;
  int z = 0;

  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: z descending, then v ascending.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.z != b.z) return a.z > b.z;
    return a.v < b.v;
  }
};

/// Sparse Laurent polynomial in v, z with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Integer& c);
  static LaurentPoly2 monomial(const Integer& c, int v_exp, int z_exp);
  static LaurentPoly2 v(int exp = 1) { return monomial(1, exp, 0); }
  static LaurentPoly2 z(int exp = 1) { return monomial(1, 0, exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(int v_exp, int z_exp) const;

  /// Adds c * v^a * z^b * other into *this.
  void add_scaled(const LaurentPoly2& other, const Integer& c, int v_exp, int z_exp);
  /// c * v^a * z^b * (*this).
  LaurentPoly2 scaled(const Integer& c, int v_exp, int z_exp) const;

  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  LaurentPoly2& operator*=(const LaurentPoly2& rhs);
  LaurentPoly2 operator-() const;

  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs);

  bool operator==(const LaurentPoly2& rhs) const { return terms_ == rhs.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

/// Deterministic rendering, e.g. "v^2*z^2 + 2*v^2 - v^4"; zero is "0".
std::string canonical_text(const LaurentPoly2& p);

/// Parses the canonical grammar (and any sum of products of integers, v^k and z^k).
LaurentPoly2 parse_poly(std::string_view text);

}  // namespace knotkit
