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

// Iwahori-Hecke algebra kernels behind the HOMFLY-PT engine.
//
// Elements of H_n are stored densely over the permutation basis T_w, indexed
// by the lexicographic rank of w in S_n. Generators satisfy
//   g_i^2 = v z g_i + v^2,   g_i^-1 = v^-2 g_i - v^-1 z,
// which is the skein relation v^-1 P(L+) - v P(L-) = z P(L0) read in the
// algebra. Every kernel has a serial reference and an OpenMP version; both
// must produce identical results.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "knotkit/laurent.hpp"

namespace knotkit::hecke {

/// Largest strand count the dense engine accepts (8! basis elements).
inline constexpr int kMaxStrands = 8;

enum class Exec { serial, parallel };

/// Enumeration of S_n in lexicographic order with the multiplication tables
/// needed by the kernels. Permutations are 0-based one-line arrays.
class PermTable {
 public:
  explicit PermTable(int n);

  int n() const { return n_; }
  std::size_t size() const { return perms_.size() / static_cast<std::size_t>(n_); }
  std::span<const std::uint8_t> perm(std::size_t rank) const;
  std::size_t rank_of(std::span<const std::uint8_t> w) const;

  /// Rank of w * s_i (swap positions i-1, i), for generator index i in 1..n-1.
  std::uint32_t right_swap(int i, std::size_t rank) const {
    return right_swap_[static_cast<std::size_t>(i - 1) * size() + rank];
  }
  /// Rank of s_i * w (swap values i-1, i).
  std::uint32_t left_swap(int i, std::size_t rank) const {
    return left_swap_[static_cast<std::size_t>(i - 1) * size() + rank];
  }
  /// l(w s_i) > l(w).
  bool right_ascent(int i, std::size_t rank) const;
  /// l(s_i w) > l(w).
  bool left_ascent(int i, std::size_t rank) const;

  static const PermTable& get(int n);

 private:
  int n_;
  std::vector<std::uint8_t> perms_;  // size() * n entries
  std::vector<std::uint32_t> right_swap_;
  std::vector<std::uint32_t> left_swap_;
};

/// Dense element of H_n.
struct Element {
  int n = 1;
  std::vector<LaurentPoly2> coeffs;

  static Element identity(int n);
};

/// x <- x * g_i^sign (sign = +1 or -1).
void right_multiply_serial(Element& x, int i, int sign);
void right_multiply_parallel(Element& x, int i, int sign);
inline void right_multiply(Element& x, int i, int sign, Exec exec) {
  exec == Exec::serial ? right_multiply_serial(x, i, sign)
                       : right_multiply_parallel(x, i, sign);
}

/// Values of the Markov trace on every basis element T_w of H_n, normalised
/// so that the trace of a braid is the HOMFLY-PT polynomial of its closure.
class TraceTable {
 public:
  const LaurentPoly2& operator[](std::size_t rank) const { return values_[rank]; }
  std::size_t size() const { return values_.size(); }
  int n() const { return n_; }

  /// Builds level n from level n-1 (n >= 2); level 1 is the constant 1.
  static TraceTable base();
  static TraceTable next_level(const TraceTable& lower, Exec exec);

  /// Cached tables shared by all callers; thread-safe.
  static const TraceTable& get(int n, Exec exec = Exec::parallel);

 private:
  int n_ = 1;
  std::vector<LaurentPoly2> values_;
};

/// Linear extension of the trace table to an element.
LaurentPoly2 trace_serial(const Element& x, const TraceTable& table);
LaurentPoly2 trace_parallel(const Element& x, const TraceTable& table);
inline LaurentPoly2 trace(const Element& x, const TraceTable& table, Exec exec) {
  return exec == Exec::serial ? trace_serial(x, table) : trace_parallel(x, table);
}

/// delta = (v^-1 - v) z^-1, the value of the 2-component unlink.
const LaurentPoly2& unlink_factor();

}  // namespace knotkit::hecke
