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

#include <string>
#include <string_view>
#include <vector>

#include "knotkit/braid.hpp"

namespace knotkit {

/// An order-preserving interleaving of {1..l1} and {l1+1..l1+l2} onto
/// {1..l1+l2}. map()[x-1] is f(x).
class Merger {
 public:
  Merger() = default;
  /// Throws DomainError unless the map is a valid merger of the given size.
  Merger(std::vector<int> map, int l1, int l2);

  static Merger identity(int l1, int l2);

  const std::vector<int>& map() const { return map_; }
  int l1() const { return l1_; }
  int l2() const { return l2_; }
  /// f(x) for x in 1..l1+l2.
  int operator()(int x) const { return map_[static_cast<std::size_t>(x - 1)]; }
  /// f^-1(k) for k in 1..l1+l2.
  int preimage(int k) const { return inverse_[static_cast<std::size_t>(k - 1)]; }

  bool operator==(const Merger& o) const { return map_ == o.map_ && l1_ == o.l1_; }

 private:
  std::vector<int> map_;
  std::vector<int> inverse_;
  int l1_ = 0;
  int l2_ = 0;
};

struct MergerCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks bijectivity and monotonicity of both restrictions. Throws
/// DomainError when the map length differs from l1 + l2.
MergerCheck validate_merger(const std::vector<int>& map, int l1, int l2);

/// All mergers of size (l1, l2) in lexicographic order of their maps.
std::vector<Merger> enumerate_mergers(int l1, int l2);

/// Braided Stallings plumbing B1 *_f B2 on n1 + n2 - 1 strands: position k of
/// the result holds letter f^-1(k) of B1 followed by B2 shifted by n1 - 1.
BklWord plumb_words(const BklWord& b1, const BklWord& b2, const Merger& f);

/// Plumbing along the identity merger (connected sum of the closures).
BklWord connected_sum_word(const BklWord& b1, const BklWord& b2);

/// "f=2,1,3 sizes=(2,1)".
Merger parse_merger(std::string_view text);
std::string format_merger(const Merger& f);

}  // namespace knotkit
