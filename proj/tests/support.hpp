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

// Printers and random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotkit/braid.hpp"
#include "knotkit/laurent.hpp"
#include "knotkit/permutation.hpp"
#include "knotkit/plumb.hpp"
#include "knotkit/rampichini.hpp"

namespace knotkit {

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) {
  return os << canonical_text(p);
}
inline std::ostream& operator<<(std::ostream& os, const ArtinWord& w) {
  return os << '[' << format_artin(w) << "] on " << w.strands();
}
inline std::ostream& operator<<(std::ostream& os, const BklWord& w) {
  return os << '[' << format_bkl(w) << "] on " << w.strands();
}
inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const RampichiniDiagram& r) {
  return os << format_diagram(r);
}

}  // namespace knotkit

namespace testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline knotkit::ArtinWord random_artin(Rng& rng, int strands, int min_len, int max_len) {
  const int len = uniform(rng, min_len, max_len);
  std::vector<int> letters;
  for (int t = 0; t < len; ++t) {
    const int g = uniform(rng, 1, strands - 1);
    letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return knotkit::ArtinWord(std::move(letters), strands);
}

inline knotkit::BklWord random_bkl(Rng& rng, int strands, int min_len, int max_len) {
  const int len = uniform(rng, min_len, max_len);
  std::vector<knotkit::BandLetter> letters;
  for (int t = 0; t < len; ++t) {
    const int i = uniform(rng, 1, strands - 1);
    const int j = uniform(rng, i + 1, strands);
    letters.push_back({i, j, uniform(rng, 0, 1) ? 1 : -1});
  }
  return knotkit::BklWord(std::move(letters), strands);
}

/// A word in which every generator occurs, so that the closure diagram is
/// connected.
inline knotkit::ArtinWord random_connected_artin(Rng& rng, int strands, int max_len) {
  for (;;) {
    auto w = random_artin(rng, strands, strands - 1, max_len);
    std::vector<bool> seen(static_cast<std::size_t>(strands), false);
    for (int letter : w.letters()) seen[static_cast<std::size_t>(std::abs(letter))] = true;
    bool all = true;
    for (int g = 1; g < strands; ++g) all = all && seen[static_cast<std::size_t>(g)];
    if (all) return w;
  }
}

inline knotkit::Merger random_merger(testing::Rng& rng, int l1, int l2) {
  std::vector<int> slots(static_cast<std::size_t>(l1 + l2));
  for (int k = 0; k < l1 + l2; ++k) slots[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::sort(slots.begin(), slots.begin() + l1);
  std::sort(slots.begin() + l1, slots.end());
  return knotkit::Merger(slots, l1, l2);
}

// A random valid diagram with 2..4 strands and 1..4 entries.
inline knotkit::RampichiniDiagram random_diagram(testing::Rng& rng) {
  for (;;) {
    const int n = uniform(rng, 2, 4);
    const int entries = uniform(rng, 1, 4);
    knotkit::RampState start;
    for (int k = 0; k < entries; ++k) {
      const int i = uniform(rng, 1, n - 1);
      const int j = uniform(rng, i + 1, n);
      start.push_back({knotkit::Transposition(i, j), uniform(rng, 0, 1) ? 1 : -1,
                       uniform(rng, 0, 3) ? knotkit::YDir::up : knotkit::YDir::down});
    }
    if (auto r = knotkit::find_diagram(n, start, 7)) return *r;
  }
}

inline std::string data_path(const std::string& name) {
  return std::string(KNOTKIT_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline knotkit::RampichiniDiagram load_diagram(const std::string& name) {
  return knotkit::parse_diagram(read_data(name));
}

}  // namespace testing
