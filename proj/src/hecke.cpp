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

#include "knotkit/hecke.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

#include "knotkit/error.hpp"

namespace knotkit::hecke {

namespace {

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw DomainError("Hecke engine supports 1.." + std::to_string(kMaxStrands) +
                      " strands, got " + std::to_string(n));
  }
}

}  // namespace

PermTable::PermTable(int n) : n_(n) {
  check_strands(n);
  std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), std::uint8_t{0});
  do {
    perms_.insert(perms_.end(), w.begin(), w.end());
  } while (std::next_permutation(w.begin(), w.end()));

  const std::size_t count = size();
  const std::size_t gens = static_cast<std::size_t>(std::max(n - 1, 0));
  right_swap_.resize(gens * count);
  left_swap_.resize(gens * count);
  std::vector<std::uint8_t> tmp(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < count; ++r) {
    auto p = perm(r);
    for (int i = 1; i < n; ++i) {
      std::copy(p.begin(), p.end(), tmp.begin());
      std::swap(tmp[static_cast<std::size_t>(i - 1)], tmp[static_cast<std::size_t>(i)]);
      right_swap_[static_cast<std::size_t>(i - 1) * count + r] =
          static_cast<std::uint32_t>(rank_of(tmp));
      std::copy(p.begin(), p.end(), tmp.begin());
      for (auto& x : tmp) {
        if (x == i - 1) {
          x = static_cast<std::uint8_t>(i);
        } else if (x == i) {
          x = static_cast<std::uint8_t>(i - 1);
        }
      }
      left_swap_[static_cast<std::size_t>(i - 1) * count + r] =
          static_cast<std::uint32_t>(rank_of(tmp));
    }
  }
}

std::span<const std::uint8_t> PermTable::perm(std::size_t rank) const {
  return {perms_.data() + rank * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
}

std::size_t PermTable::rank_of(std::span<const std::uint8_t> w) const {
  std::size_t rank = 0;
  std::array<bool, 16> used{};
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::size_t smaller = 0;
    for (std::uint8_t x = 0; x < w[k]; ++x) smaller += used[x] ? 0 : 1;
    used[w[k]] = true;
    rank = rank * (w.size() - k) + smaller;
  }
  return rank;
}

bool PermTable::right_ascent(int i, std::size_t rank) const {
  auto p = perm(rank);
  return p[static_cast<std::size_t>(i - 1)] < p[static_cast<std::size_t>(i)];
}

bool PermTable::left_ascent(int i, std::size_t rank) const {
  auto p = perm(rank);
  std::size_t pos_lo = 0;
  std::size_t pos_hi = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == i - 1) pos_lo = k;
    if (p[k] == i) pos_hi = k;
  }
  return pos_lo < pos_hi;
}

const PermTable& PermTable::get(int n) {
  check_strands(n);
  static std::mutex mutex;
  static std::array<std::unique_ptr<PermTable>, kMaxStrands + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = std::make_unique<PermTable>(n);
  return *slot;
}

Element Element::identity(int n) {
  const auto& table = PermTable::get(n);
  Element x;
  x.n = n;
  x.coeffs.resize(table.size());
  x.coeffs[0] = LaurentPoly2::constant(1);
  return x;
}

namespace {

// Acts on the pair (T_w, T_{w s_i}) where l(w s_i) > l(w).
void multiply_pair(LaurentPoly2& shorter, LaurentPoly2& longer, int sign) {
  if (shorter.is_zero() && longer.is_zero()) return;
  LaurentPoly2 a = std::move(shorter);
  LaurentPoly2 b = std::move(longer);
  if (sign > 0) {
    // T_w g = T_{ws};  T_{ws} g = vz T_{ws} + v^2 T_w.
    longer = std::move(a);
    longer.add_scaled(b, 1, 1, 1);
    shorter = b.scaled(1, 2, 0);
  } else {
    // T_w g^-1 = v^-2 T_{ws} - v^-1 z T_w;  T_{ws} g^-1 = T_w.
    shorter = std::move(b);
    shorter.add_scaled(a, -1, -1, 1);
    longer = a.scaled(1, -2, 0);
  }
}

void check_generator(const Element& x, int i, int sign) {
  if (i < 1 || i >= x.n) {
    throw DomainError("generator " + std::to_string(i) + " out of range for H_" +
                      std::to_string(x.n));
  }
  if (sign != 1 && sign != -1) throw DomainError("generator exponent must be +1 or -1");
}

}  // namespace

void right_multiply_serial(Element& x, int i, int sign) {
  check_generator(x, i, sign);
  const auto& table = PermTable::get(x.n);
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!table.right_ascent(i, r)) continue;
    multiply_pair(x.coeffs[r], x.coeffs[table.right_swap(i, r)], sign);
  }
}

void right_multiply_parallel(Element& x, int i, int sign) {
  check_generator(x, i, sign);
  const auto& table = PermTable::get(x.n);
  const auto count = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < count; ++r) {
    const auto rank = static_cast<std::size_t>(r);
    if (!table.right_ascent(i, rank)) continue;
    multiply_pair(x.coeffs[rank], x.coeffs[table.right_swap(i, rank)], sign);
  }
}

const LaurentPoly2& unlink_factor() {
  static const LaurentPoly2 delta =
      LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(-1, 1, -1);
  return delta;
}

namespace {

// Trace of T_w for w in S_m, given the trace table of level m-1.
LaurentPoly2 basis_trace(const PermTable& upper, const PermTable& lower,
                         const TraceTable& lower_trace, std::size_t rank) {
  const int m = upper.n();
  auto w = upper.perm(rank);
  const auto top = static_cast<std::uint8_t>(m - 1);
  const auto pos = static_cast<int>(std::find(w.begin(), w.end(), top) - w.begin());

  std::vector<std::uint8_t> u;
  u.reserve(static_cast<std::size_t>(m - 1));
  for (auto x : w) {
    if (x != top) u.push_back(x);
  }
  const std::size_t u_rank = lower.rank_of(u);
  if (pos == m - 1) return lower_trace[u_rank] * unlink_factor();

  // T_w = T_u g_{m-1} g_{m-2} ... g_K with K = pos + 1; conjugating the tail
  // g_{m-2} ... g_K to the front and destabilising leaves
  // tr_{m-1}(g_{m-2} ... g_K T_u).
  std::map<std::size_t, LaurentPoly2> element;
  element.emplace(u_rank, LaurentPoly2::constant(1));
  for (int gen = pos + 1; gen <= m - 2; ++gen) {
    std::map<std::size_t, LaurentPoly2> next;
    for (auto& [r, c] : element) {
      const std::size_t s_r = lower.left_swap(gen, r);
      if (lower.left_ascent(gen, r)) {
        next[s_r] += c;
      } else {
        next[r].add_scaled(c, 1, 1, 1);
        next[s_r].add_scaled(c, 1, 2, 0);
      }
    }
    element = std::move(next);
  }
  LaurentPoly2 value;
  for (const auto& [r, c] : element) {
    if (!c.is_zero()) value += c * lower_trace[r];
  }
  return value;
}

}  // namespace

TraceTable TraceTable::base() {
  TraceTable t;
  t.n_ = 1;
  t.values_.push_back(LaurentPoly2::constant(1));
  return t;
}

TraceTable TraceTable::next_level(const TraceTable& lower_trace, Exec exec) {
  const int m = lower_trace.n() + 1;
  const auto& upper = PermTable::get(m);
  const auto& lower = PermTable::get(m - 1);
  TraceTable t;
  t.n_ = m;
  t.values_.resize(upper.size());
  const auto count = static_cast<std::int64_t>(upper.size());
  if (exec == Exec::serial) {
    for (std::int64_t r = 0; r < count; ++r) {
      t.values_[static_cast<std::size_t>(r)] =
          basis_trace(upper, lower, lower_trace, static_cast<std::size_t>(r));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < count; ++r) {
      t.values_[static_cast<std::size_t>(r)] =
          basis_trace(upper, lower, lower_trace, static_cast<std::size_t>(r));
    }
  }
  return t;
}

const TraceTable& TraceTable::get(int n, Exec exec) {
  check_strands(n);
  static std::mutex mutex;
  static std::array<std::unique_ptr<TraceTable>, kMaxStrands + 1> cache;
  std::lock_guard lock(mutex);
  if (!cache[1]) cache[1] = std::make_unique<TraceTable>(base());
  for (int m = 2; m <= n; ++m) {
    auto& slot = cache[static_cast<std::size_t>(m)];
    if (!slot) {
      slot = std::make_unique<TraceTable>(next_level(*cache[static_cast<std::size_t>(m - 1)], exec));
    }
  }
  return *cache[static_cast<std::size_t>(n)];
}

LaurentPoly2 trace_serial(const Element& x, const TraceTable& table) {
  if (x.coeffs.size() != table.size()) throw DomainError("element and trace table sizes differ");
  LaurentPoly2 total;
  for (std::size_t r = 0; r < x.coeffs.size(); ++r) {
    if (!x.coeffs[r].is_zero()) total += x.coeffs[r] * table[r];
  }
  return total;
}

LaurentPoly2 trace_parallel(const Element& x, const TraceTable& table) {
  if (x.coeffs.size() != table.size()) throw DomainError("element and trace table sizes differ");
  LaurentPoly2 total;
  const auto count = static_cast<std::int64_t>(x.coeffs.size());
#pragma omp parallel
  {
    LaurentPoly2 local;
#pragma omp for schedule(static) nowait
    for (std::int64_t r = 0; r < count; ++r) {
      const auto& c = x.coeffs[static_cast<std::size_t>(r)];
      if (!c.is_zero()) local += c * table[static_cast<std::size_t>(r)];
    }
#pragma omp critical
    total += local;
  }
  return total;
}

}  // namespace knotkit::hecke
