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

#include <compare>
#include <string>
#include <vector>

namespace knotkit {

/// A transposition (i j) of {1..n}, stored with i < j.
struct Transposition {
  int i = 1;
  int j = 2;

  Transposition() = default;
  Transposition(int a, int b);

  /// (i+k j+k) with entries reduced into 1..n.
  Transposition shifted(int k, int n) const;

  /// s t s, i.e. the transposition on s's images of i and j.
  Transposition conjugated_by(Transposition s) const;

  bool moves(int x) const { return x == i || x == j; }
  bool disjoint_from(Transposition o) const {
    return !moves(o.i) && !moves(o.j);
  }

  auto operator<=>(const Transposition&) const = default;
};

/// A bijection of {1..n}. Products are function composition:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(int n = 0);

  /// images[x-1] is the image of x; throws DomainError unless bijective.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int n, Transposition t);
  /// The cycle (1 2 ... n) sending x to x+1 and n to 1.
  static Permutation full_cycle(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// True when the permutation is a single n-cycle (n = size()).
  bool is_full_cycle() const;
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation without fixed points, e.g. "(1 3 2)"; identity is "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace knotkit
