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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotkit/permutation.hpp"

namespace knotkit {

/// A word in the Artin generators: letter i > 0 is sigma_i, i < 0 is
/// sigma_|i|^-1. The strand count is carried explicitly.
class ArtinWord {
 public:
  ArtinWord() = default;
  /// Throws DomainError on a zero letter, strands < 1, or |letter| >= strands.
  ArtinWord(std::vector<int> letters, int strands);

  const std::vector<int>& letters() const { return letters_; }
  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const ArtinWord&) const = default;

 private:
  std::vector<int> letters_;
  int strands_ = 1;
};

/// Band generator a(i,j)^sign with 1 <= i < j.
struct BandLetter {
  int i = 1;
  int j = 2;
  int sign = 1;

  bool operator==(const BandLetter&) const = default;
};

/// A word in the Birman-Ko-Lee band generators on an explicit strand count.
class BklWord {
 public:
  BklWord() = default;
  BklWord(std::vector<BandLetter> letters, int strands);

  const std::vector<BandLetter>& letters() const { return letters_; }
  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BklWord&) const = default;

 private:
  std::vector<BandLetter> letters_;
  int strands_ = 1;
};

/// The block (1, ..., p-1) repeated q times, on p strands.
ArtinWord torus_knot_braid_word(int p, int q);

int writhe(const ArtinWord& w);
int writhe(const BklWord& w);

/// Concatenation on the larger of the two strand counts.
ArtinWord concat(const ArtinWord& a, const ArtinWord& b);
BklWord concat(const BklWord& a, const BklWord& b);

/// The (k,l)-cable construction: every letter is replaced by k descending
/// runs and a framing tail of (l - k*writhe) twists on the first k strands
/// is appended.
ArtinWord cable_word(const ArtinWord& w, int k, int l);

/// Product t_1 * t_2 * ... * t_m of the letters' transpositions (function
/// composition, so t_m acts first).
Permutation word_permutation(const ArtinWord& w);
Permutation word_permutation(const BklWord& w);

/// Shifts every a(i,j) to a(i+offset, j+offset) on new_strands strands.
BklWord bkl_shift(const BklWord& w, int offset, int new_strands);

/// a(i,j)^e = (s_{j-1} ... s_{i+1}) s_i^e (s_{i+1}^-1 ... s_{j-1}^-1).
ArtinWord bkl_to_artin(const BklWord& w);

/// Parses "1 -2 3" with an optional "strands=<m>;" header. Without a header
/// the strand count is max|letter| + 1.
ArtinWord parse_artin(std::string_view text);
/// Parses "a(1,3) A(2,3)" with an optional "strands=<n>;" header.
BklWord parse_bkl(std::string_view text);

/// Space-separated letters; a "strands=<m>; " header is emitted only when the
/// strand count differs from the inferred one.
std::string format_artin(const ArtinWord& w);
std::string format_bkl(const BklWord& w);

}  // namespace knotkit
