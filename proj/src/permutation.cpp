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

#include "knotkit/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

int wrap_index(int x, int n) { return ((x - 1) % n + n) % n + 1; }

}  // namespace

Transposition::Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b || a < 1 || b < 1) {
    throw DomainError("transposition needs two distinct positive indices, got (" +
                      std::to_string(a) + " " + std::to_string(b) + ")");
  }
}

Transposition Transposition::shifted(int k, int n) const {
  return Transposition(wrap_index(i + k, n), wrap_index(j + k, n));
}

Transposition Transposition::conjugated_by(Transposition s) const {
  auto apply = [s](int x) { return x == s.i ? s.j : (x == s.j ? s.i : x); };
  return Transposition(apply(i), apply(j));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  for (int x = 1; x <= n; ++x) images_[static_cast<std::size_t>(x - 1)] = x;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int y : images) {
    if (y < 1 || y > n || seen[static_cast<std::size_t>(y - 1)]) {
      throw DomainError("images do not form a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(y - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, Transposition t) {
  if (t.j > n) {
    throw DomainError("transposition (" + std::to_string(t.i) + " " + std::to_string(t.j) +
                      ") does not act on " + std::to_string(n) + " points");
  }
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(t.i - 1)],
            p.images_[static_cast<std::size_t>(t.j - 1)]);
  return p;
}

Permutation Permutation::full_cycle(int n) {
  Permutation p(n);
  for (int x = 1; x <= n; ++x) p.images_[static_cast<std::size_t>(x - 1)] = x % n + 1;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (int x = 1; x <= size(); ++x) p.images_[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= size(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

bool Permutation::is_full_cycle() const {
  if (size() <= 1) return true;
  int x = 1;
  int length = 0;
  do {
    x = (*this)(x);
    ++length;
  } while (x != 1);
  return length == size();
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k];
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("permutation sizes differ");
  Permutation p(a.size());
  for (int x = 1; x <= a.size(); ++x) p.images_[static_cast<std::size_t>(x - 1)] = a(b(x));
  return p;
}

}  // namespace knotkit
