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

#include <cstdlib>

#include "knotkit/braid.hpp"
#include "knotkit/error.hpp"
#include "support.hpp"

using namespace knotkit;

namespace {

ArtinWord artin(std::vector<int> letters, int strands) { return ArtinWord(std::move(letters), strands); }

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("torus knot braid words") {
  CHECK(torus_knot_braid_word(2, 3) == artin({1, 1, 1}, 2));
  CHECK(torus_knot_braid_word(1, 5) == artin({}, 1));
  CHECK(torus_knot_braid_word(3, 2) == artin({1, 2, 1, 2}, 3));
}

TEST_CASE("writhe") {
  CHECK(writhe(artin({1, 1, 1}, 2)) == 3);
  CHECK(writhe(artin({}, 1)) == 0);
  CHECK(writhe(artin({1, -1, 2, -2}, 3)) == 0);
  CHECK(writhe(parse_bkl("a(1,3) A(2,3) A(1,2)")) == -1);
}

TEST_CASE("cable words") {
  CHECK(cable_word(artin({1, 1, 1}, 2), 2, 1) ==
        artin({2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2, -1, -1, -1, -1, -1}, 4));
  CHECK(cable_word(artin({}, 1), 2, 3) == artin({1, 1, 1}, 2));
  const ArtinWord w = artin({1, -2, 1, 3}, 4);
  CHECK(cable_word(w, 1, writhe(w)) == w);
  CHECK_THROWS_AS(cable_word(w, 0, 1), DomainError);
  CHECK_THROWS_AS(ArtinWord({3}, 3), DomainError);
}

TEST_CASE("word permutations") {
  CHECK(word_permutation(artin({1, 1, 1}, 2)) == Permutation::from_images({2, 1}));
  CHECK(word_permutation(artin({}, 3)).is_identity());
  const Permutation p = word_permutation(parse_bkl("a(1,3) a(2,3)"));
  CHECK(p(1) == 3);
  CHECK(p(3) == 2);
  CHECK(p(2) == 1);
}

TEST_CASE("bkl shift") {
  CHECK(bkl_shift(parse_bkl("strands=3; a(1,3)"), 2, 5) == parse_bkl("strands=5; a(3,5)"));
  CHECK(bkl_shift(parse_bkl("a(2,3) a(1,2)"), 1, 4) == parse_bkl("a(3,4) a(2,3)"));
  const BklWord w = parse_bkl("strands=4; a(1,2) A(2,4)");
  CHECK(bkl_shift(w, 0, 4) == w);
  CHECK_THROWS_AS(bkl_shift(w, 1, 4), DomainError);
}

TEST_CASE("band generators in Artin letters") {
  CHECK(bkl_to_artin(parse_bkl("a(1,2)")) == artin({1}, 2));
  CHECK(bkl_to_artin(parse_bkl("a(1,3)")) == artin({2, 1, -2}, 3));
  CHECK(bkl_to_artin(parse_bkl("A(2,4)")) == artin({3, -2, -3}, 4));
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_artin("1 -2 3") == artin({1, -2, 3}, 4));
  CHECK(parse_artin("strands=6; 1 -2") == artin({1, -2}, 6));
  CHECK(parse_artin("") == artin({}, 1));
  CHECK(format_artin(artin({1, -2}, 6)) == "strands=6; 1 -2");
  CHECK(format_artin(artin({1, 1, 1}, 2)) == "1 1 1");
  CHECK(format_bkl(parse_bkl("a(1,3)A(2,3)")) == "a(1,3) A(2,3)");
  CHECK_THROWS_AS(parse_artin("1 x"), ParseError);
  CHECK_THROWS_AS(parse_artin("0"), ParseError);
  CHECK_THROWS_AS(parse_bkl("a(2,2)"), ParseError);
  CHECK_THROWS_AS(parse_bkl("a(1,2"), ParseError);
}

TEST_CASE("property: writhe is additive") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = testing::random_artin(rng, testing::uniform(rng, 2, 6), 0, 10);
    const auto w = testing::random_artin(rng, testing::uniform(rng, 2, 6), 0, 10);
    CHECK(writhe(concat(u, w)) == writhe(u) + writhe(w));
    const auto b = testing::random_bkl(rng, 5, 0, 8);
    const auto c = testing::random_bkl(rng, 4, 0, 8);
    CHECK(writhe(concat(b, c)) == writhe(b) + writhe(c));
  }
}

TEST_CASE("property: band expansion keeps the permutation and writhe") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = testing::random_bkl(rng, testing::uniform(rng, 2, 6), 0, 10);
    const ArtinWord a = bkl_to_artin(w);
    CHECK(word_permutation(a) == word_permutation(w));
    CHECK(writhe(a) == writhe(w));
    CHECK(a.strands() == w.strands());
  }
}

TEST_CASE("property: cable word length") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = testing::random_artin(rng, testing::uniform(rng, 2, 4), 0, 6);
    const int k = testing::uniform(rng, 1, 3);
    const int l = testing::uniform(rng, -6, 6);
    const std::size_t expected = static_cast<std::size_t>(k * k) * w.size() +
                                 static_cast<std::size_t>(std::abs(l - k * writhe(w)) * (k - 1));
    CHECK(cable_word(w, k, l).size() == expected);
    CHECK(cable_word(w, k, l).strands() == k * w.strands());
  }
}

TEST_CASE("property: torus words have writhe (p-1)q") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 9; ++q) CHECK(writhe(torus_knot_braid_word(p, q)) == (p - 1) * q);
  }
}

TEST_CASE("property: shifting is a homomorphism") {
  testing::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = testing::random_bkl(rng, 3, 0, 6);
    const auto w = testing::random_bkl(rng, 3, 0, 6);
    const int offset = testing::uniform(rng, 0, 3);
    CHECK(bkl_shift(concat(u, w), offset, 6) == concat(bkl_shift(u, offset, 6), bkl_shift(w, offset, 6)));
  }
}

TEST_CASE("property: formatting round-trips") {
  testing::Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_artin(rng, testing::uniform(rng, 2, 7), 0, 10);
    CHECK(parse_artin(format_artin(a)) == a);
    const auto b = testing::random_bkl(rng, testing::uniform(rng, 2, 7), 0, 10);
    CHECK(parse_bkl(format_bkl(b)) == b);
  }
}

}  // TEST_SUITE
