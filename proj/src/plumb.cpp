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

#include "knotkit/plumb.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

MergerCheck validate_merger(const std::vector<int>& map, int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw DomainError("merger sizes must be non-negative");
  const int total = l1 + l2;
  if (static_cast<int>(map.size()) != total) {
    throw DomainError("merger map has length " + std::to_string(map.size()) + ", expected " +
                      std::to_string(total));
  }
  MergerCheck check;
  std::vector<bool> hit(static_cast<std::size_t>(total) + 1, false);
  for (int x = 1; x <= total; ++x) {
    const int y = map[static_cast<std::size_t>(x - 1)];
    if (y < 1 || y > total) {
      check.violations.push_back("f(" + std::to_string(x) + ") = " + std::to_string(y) +
                                 " is outside 1.." + std::to_string(total));
    } else if (hit[static_cast<std::size_t>(y)]) {
      check.violations.push_back("f is not injective: value " + std::to_string(y) +
                                 " repeats at " + std::to_string(x));
    } else {
      hit[static_cast<std::size_t>(y)] = true;
    }
  }
  for (int x = 2; x <= total; ++x) {
    if (x == l1 + 1) continue;  // block boundary
    if (map[static_cast<std::size_t>(x - 2)] >= map[static_cast<std::size_t>(x - 1)]) {
      check.violations.push_back(std::string(x <= l1 ? "first" : "second") +
                                 " block is not increasing at " + std::to_string(x - 1) + ", " +
                                 std::to_string(x));
    }
  }
  check.valid = check.violations.empty();
  return check;
}

Merger::Merger(std::vector<int> map, int l1, int l2)
    : map_(std::move(map)), l1_(l1), l2_(l2) {
  const auto check = validate_merger(map_, l1, l2);
  if (!check.valid) throw DomainError("invalid merger: " + check.violations.front());
  inverse_.assign(map_.size(), 0);
  for (int x = 1; x <= l1 + l2; ++x) inverse_[static_cast<std::size_t>((*this)(x) - 1)] = x;
}

Merger Merger::identity(int l1, int l2) {
  std::vector<int> map(static_cast<std::size_t>(l1 + l2));
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = static_cast<int>(k) + 1;
  return Merger(std::move(map), l1, l2);
}

std::vector<Merger> enumerate_mergers(int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw DomainError("merger sizes must be non-negative");
  // A merger is determined by the image set of the first block.
  const int total = l1 + l2;
  std::vector<char> first_block(static_cast<std::size_t>(total), 0);
  std::fill(first_block.begin(), first_block.begin() + l1, 1);
  std::vector<Merger> out;
  do {
    std::vector<int> map(static_cast<std::size_t>(total));
    int next1 = 0;
    int next2 = l1;
    for (int slot = 1; slot <= total; ++slot) {
      if (first_block[static_cast<std::size_t>(slot - 1)]) {
        map[static_cast<std::size_t>(next1++)] = slot;
      } else {
        map[static_cast<std::size_t>(next2++)] = slot;
      }
    }
    out.emplace_back(std::move(map), l1, l2);
  } while (std::prev_permutation(first_block.begin(), first_block.end()));
  std::sort(out.begin(), out.end(),
            [](const Merger& a, const Merger& b) { return a.map() < b.map(); });
  return out;
}

BklWord plumb_words(const BklWord& b1, const BklWord& b2, const Merger& f) {
  if (b1.strands() < 2 || b2.strands() < 2) {
    throw DomainError("plumbing needs at least 2 strands on each summand");
  }
  if (f.l1() != static_cast<int>(b1.size()) || f.l2() != static_cast<int>(b2.size())) {
    throw DomainError("merger size (" + std::to_string(f.l1()) + "," + std::to_string(f.l2()) +
                      ") does not match word lengths (" + std::to_string(b1.size()) + "," +
                      std::to_string(b2.size()) + ")");
  }
  const int n1 = b1.strands();
  const int strands = n1 + b2.strands() - 1;
  const BklWord shifted = bkl_shift(b2, n1 - 1, strands);
  std::vector<BandLetter> letters;
  letters.reserve(b1.size() + b2.size());
  for (int k = 1; k <= f.l1() + f.l2(); ++k) {
    const int x = f.preimage(k);
    letters.push_back(x <= f.l1() ? b1.letters()[static_cast<std::size_t>(x - 1)]
                                  : shifted.letters()[static_cast<std::size_t>(x - f.l1() - 1)]);
  }
  return BklWord(std::move(letters), strands);
}

BklWord connected_sum_word(const BklWord& b1, const BklWord& b2) {
  return plumb_words(b1, b2,
                     Merger::identity(static_cast<int>(b1.size()), static_cast<int>(b2.size())));
}

Merger parse_merger(std::string_view text) {
  static const std::regex grammar(
      R"(^\s*f\s*=\s*([0-9,\s]*?)\s*sizes\s*=\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
    throw ParseError("expected 'f=<i1>,<i2>,... sizes=(l1,l2)'");
  }
  std::vector<int> map;
  std::stringstream items(m[1].str());
  std::string item;
  while (std::getline(items, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    map.push_back(std::stoi(item));
  }
  const int l1 = std::stoi(m[2].str());
  const int l2 = std::stoi(m[3].str());
  if (static_cast<int>(map.size()) != l1 + l2) {
    throw ParseError("merger lists " + std::to_string(map.size()) + " images for sizes (" +
                     std::to_string(l1) + "," + std::to_string(l2) + ")");
  }
  return Merger(std::move(map), l1, l2);
}

std::string format_merger(const Merger& f) {
  std::ostringstream os;
  os << "f=";
  for (std::size_t k = 0; k < f.map().size(); ++k) os << (k ? "," : "") << f.map()[k];
  os << " sizes=(" << f.l1() << "," << f.l2() << ")";
  return os.str();
}

}  // namespace knotkit
