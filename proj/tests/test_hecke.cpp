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

#include "knotkit/error.hpp"
#include "knotkit/hecke.hpp"
#include "support.hpp"

using namespace knotkit;
using namespace knotkit::hecke;

TEST_SUITE("hecke") {

TEST_CASE("permutation tables") {
  const PermTable& t = PermTable::get(4);
  CHECK(t.size() == 24);
  for (std::size_t r = 0; r < t.size(); ++r) {
    CHECK(t.rank_of(t.perm(r)) == r);
    for (int i = 1; i < 4; ++i) {
      CHECK(t.right_swap(i, t.right_swap(i, r)) == r);
      CHECK(t.left_swap(i, t.left_swap(i, r)) == r);
      CHECK(t.right_ascent(i, r) != t.right_ascent(i, t.right_swap(i, r)));
    }
  }
  CHECK_THROWS_AS(PermTable(kMaxStrands + 1), DomainError);
}

TEST_CASE("quadratic relation") {
  Element x = Element::identity(2);
  right_multiply_serial(x, 1, 1);
  right_multiply_serial(x, 1, 1);
  // g^2 = v z g + v^2
  CHECK(x.coeffs[0] == LaurentPoly2::v(2));
  CHECK(x.coeffs[1] == LaurentPoly2::monomial(1, 1, 1));
  right_multiply_serial(x, 1, -1);
  right_multiply_serial(x, 1, -1);
  CHECK(x.coeffs[0] == LaurentPoly2::constant(1));
  CHECK(x.coeffs[1].is_zero());
}

TEST_CASE("serial and parallel multiplication agree") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = testing::random_artin(rng, testing::uniform(rng, 2, 5), 0, 12);
    Element a = Element::identity(w.strands());
    Element b = Element::identity(w.strands());
    for (int letter : w.letters()) {
      right_multiply_serial(a, std::abs(letter), letter > 0 ? 1 : -1);
      right_multiply_parallel(b, std::abs(letter), letter > 0 ? 1 : -1);
    }
    CHECK(a.coeffs == b.coeffs);
    const auto& table = TraceTable::get(w.strands(), Exec::serial);
    CHECK(trace_serial(a, table) == trace_parallel(b, table));
  }
}

TEST_CASE("serial and parallel trace tables agree") {
  TraceTable serial = TraceTable::base();
  TraceTable parallel = TraceTable::base();
  for (int n = 2; n <= 6; ++n) {
    serial = TraceTable::next_level(serial, Exec::serial);
    parallel = TraceTable::next_level(parallel, Exec::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t r = 0; r < serial.size(); ++r) CHECK(serial[r] == parallel[r]);
  }
}

TEST_CASE("trace values") {
  const auto& t2 = TraceTable::get(2);
  CHECK(t2[0] == unlink_factor());
  CHECK(t2[1] == LaurentPoly2::constant(1));
  CHECK(unlink_factor() == (LaurentPoly2::v(-1) - LaurentPoly2::v()) * LaurentPoly2::z(-1));
}

}  // TEST_SUITE
