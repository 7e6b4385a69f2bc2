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

#include <doctest.h>

#include <set>

#include "knotkit/error.hpp"
#include "knotkit/laurent.hpp"
#include "support.hpp"

using namespace knotkit;

namespace {

using P = LaurentPoly2;

P random_poly(testing::Rng& rng) {
  P p;
  const int terms = testing::uniform(rng, 0, 5);
  for (int t = 0; t < terms; ++t) {
    p += P::monomial(testing::uniform(rng, -9, 9), testing::uniform(rng, -6, 6),
                     testing::uniform(rng, -6, 6));
  }
  return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("arithmetic") {
  CHECK((P::v() + P::z()) + (-P::v()) == P::z());
  CHECK((P::v(-1) - P::v()) * P::z(-1) * P::z() == P::v(-1) - P::v());
  CHECK((P::monomial(1, 1, 1) + P::monomial(1, 1, -1)) * P::monomial(1, 1, 1) ==
        P::monomial(1, 2, 2) + P::monomial(1, 2, 0));
  CHECK((P::v() - P::v()).is_zero());
  CHECK((P::v() - P::v()).term_count() == 0);
}

TEST_CASE("coefficients are arbitrary precision") {
  P p = P::constant(Integer(1) << 100);
  p *= p;
  CHECK(p.coefficient(0, 0) == Integer(1) << 200);
  CHECK(canonical_text(P::constant(Integer(1) << 70)) == "1180591620717411303424");
}

TEST_CASE("canonical text") {
  CHECK(canonical_text(P()) == "0");
  CHECK(canonical_text(P::v(-1) - P::v()) == "v^-1 - v");
  CHECK(canonical_text(P::monomial(1, 2, 2) + P::monomial(2, 2, 0) - P::v(4)) ==
        "v^2*z^2 + 2*v^2 - v^4");
  CHECK(canonical_text(P::monomial(1, 1, 1) + P::monomial(1, 1, -1) - P::monomial(1, 3, -1)) ==
        "v*z + v*z^-1 - v^3*z^-1");
  CHECK(canonical_text(P::constant(-1)) == "-1");
  CHECK(canonical_text(P::monomial(-3, 0, 2) + P::constant(1)) == "-3*z^2 + 1");
}

TEST_CASE("parsing") {
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("v^2*z^2 + 2*v^2 - v^4") ==
        P::monomial(1, 2, 2) + P::monomial(2, 2, 0) - P::v(4));
  CHECK(parse_poly("-v^-1 + 3") == P::constant(3) - P::v(-1));
  CHECK(parse_poly("2*v*2") == P::monomial(4, 1, 0));
  CHECK_THROWS_AS(parse_poly("v^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x"), ParseError);
  CHECK_THROWS_AS(parse_poly("v +"), ParseError);
}

TEST_CASE("property: ring axioms") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const P a = random_poly(rng);
    const P b = random_poly(rng);
    const P c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == P());
    CHECK(a * P::constant(1) == a);
  }
}

TEST_CASE("property: text is injective and round-trips") {
  testing::Rng rng(22);
  std::set<std::string> texts;
  std::vector<P> polys;
  for (int trial = 0; trial < 300; ++trial) {
    const P p = random_poly(rng);
    const std::string text = canonical_text(p);
    CHECK(parse_poly(text) == p);
    bool seen = false;
    for (const P& q : polys) seen = seen || q == p;
    if (!seen) {
      polys.push_back(p);
      CHECK(texts.insert(text).second);
    }
  }
}

}  // TEST_SUITE
