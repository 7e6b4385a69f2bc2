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

#include "knotkit/homfly.hpp"

#include <cstdlib>
#include <optional>

#include "knotkit/error.hpp"

namespace knotkit {

LaurentPoly2 homfly_vz(const ArtinWord& w, hecke::Exec exec) {
  auto x = hecke::Element::identity(w.strands());
  for (int letter : w.letters()) {
    hecke::right_multiply(x, std::abs(letter), letter > 0 ? 1 : -1, exec);
  }
  return hecke::trace(x, hecke::TraceTable::get(w.strands(), exec), exec);
}

namespace {

struct Traversal {
  int components = 0;
  std::optional<std::size_t> first_bad;  // crossing first met from below
};

// Walks the closure component by component, each from its lowest free strand
// at the bottom of the braid. For sigma_i the strand moving i -> i+1 passes
// over; for sigma_i^-1 the strand moving i+1 -> i does.
Traversal traverse(const std::vector<int>& letters, int strands) {
  Traversal out;
  std::vector<bool> base_seen(static_cast<std::size_t>(strands) + 1, false);
  std::vector<bool> crossing_seen(letters.size(), false);
  for (int start = 1; start <= strands; ++start) {
    if (base_seen[static_cast<std::size_t>(start)]) continue;
    ++out.components;
    int p = start;
    do {
      base_seen[static_cast<std::size_t>(p)] = true;
      for (std::size_t t = 0; t < letters.size(); ++t) {
        const int i = std::abs(letters[t]);
        if (p != i && p != i + 1) continue;
        const bool rising = p == i;
        if (!crossing_seen[t]) {
          crossing_seen[t] = true;
          const bool over = rising == (letters[t] > 0);
          if (!over && !out.first_bad) out.first_bad = t;
        }
        p = rising ? i + 1 : i;
      }
    } while (p != start);
  }
  return out;
}

LaurentPoly2 unlink_value(int components) {
  LaurentPoly2 value = LaurentPoly2::constant(1);
  for (int k = 1; k < components; ++k) value *= hecke::unlink_factor();
  return value;
}

LaurentPoly2 skein_tree(std::vector<int> letters, int strands) {
  const Traversal tr = traverse(letters, strands);
  if (!tr.first_bad) return unlink_value(tr.components);
  const std::size_t t = *tr.first_bad;
  const int letter = letters[t];

  std::vector<int> smoothed = letters;
  smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(t));
  letters[t] = -letter;

  const LaurentPoly2 switched_value = skein_tree(std::move(letters), strands);
  const LaurentPoly2 smoothed_value = skein_tree(std::move(smoothed), strands);
  if (letter > 0) {
    // P+ = v^2 P- + v z P0
    LaurentPoly2 out = switched_value.scaled(1, 2, 0);
    out.add_scaled(smoothed_value, 1, 1, 1);
    return out;
  }
  // P- = v^-2 P+ - v^-1 z P0
  LaurentPoly2 out = switched_value.scaled(1, -2, 0);
  out.add_scaled(smoothed_value, -1, -1, 1);
  return out;
}

}  // namespace

LaurentPoly2 homfly_oracle(const ArtinWord& w) {
  if (w.size() > kOracleMaxLength) {
    throw DomainError("oracle accepts words of length <= " + std::to_string(kOracleMaxLength) +
                      ", got " + std::to_string(w.size()));
  }
  return skein_tree(w.letters(), w.strands());
}

int max_z_degree(const LaurentPoly2& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no z-degree");
  // Terms are ordered by z descending.
  return p.terms().begin()->first.z;
}

int gc_lower_bound(const ArtinWord& w, hecke::Exec exec) {
  if (!word_permutation(w).is_full_cycle()) {
    throw DomainError("closure of the braid is not a knot (permutation " +
                      word_permutation(w).to_string() + " is not a " +
                      std::to_string(w.strands()) + "-cycle)");
  }
  const int degree = max_z_degree(homfly_vz(w, exec));
  if (degree % 2 != 0) {
    throw DomainError("odd top z-degree " + std::to_string(degree) + " for a knot");
  }
  return degree / 2;
}

int torus_knot_genus(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("torus knot parameters must be positive");
  return static_cast<int>(static_cast<long long>(p - 1) * (q - 1) / 2);
}

int cable_genus(int p, int q, int k, int l) {
  return k * torus_knot_genus(p, q) + torus_knot_genus(k, l);
}

std::vector<SurveyRow> survey(int max_n, hecke::Exec exec) {
  if (max_n < 1) throw DomainError("survey needs max_n >= 1");
  std::vector<SurveyRow> rows(static_cast<std::size_t>(max_n));
  // Rows are independent; the inner kernels run serially inside this loop.
  const auto run_row = [](SurveyRow& row, int n) {
    row.n = n;
    row.genus = cable_genus(2, 2 * n + 1, 2, 1);
    try {
      const ArtinWord word = cable_word(torus_knot_braid_word(2, 2 * n + 1), 2, 1);
      row.cable_word_length = word.size();
      row.gc_lower_bound = gc_lower_bound(word, hecke::Exec::serial);
      row.verdict = row.gc_lower_bound > row.genus ? Verdict::not_canonically_fibered
                                                   : Verdict::inconclusive;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.verdict = Verdict::inconclusive;
    }
  };
  // Warm the shared trace table once so rows only read it.
  hecke::TraceTable::get(4, exec);
  if (exec == hecke::Exec::serial) {
    for (int n = 1; n <= max_n; ++n) run_row(rows[static_cast<std::size_t>(n - 1)], n);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int n = 1; n <= max_n; ++n) run_row(rows[static_cast<std::size_t>(n - 1)], n);
  }
  return rows;
}

std::string to_string(Verdict v) {
  return v == Verdict::not_canonically_fibered ? "not_canonically_fibered" : "inconclusive";
}

std::string format_survey_row(const SurveyRow& row) {
  return std::to_string(row.n) + "\t" + std::to_string(row.genus) + "\t" +
         std::to_string(row.gc_lower_bound) + "\t" + to_string(row.verdict);
}

}  // namespace knotkit
