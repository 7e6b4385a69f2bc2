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
#include <vector>

#include "knotkit/braid.hpp"
#include "knotkit/hecke.hpp"
#include "knotkit/laurent.hpp"

namespace knotkit {

/// HOMFLY-PT polynomial of the braid closure, normalised by
///   v^-1 P(L+) - v P(L-) = z P(L0),  P(unknot) = 1.
/// Computed as the Markov trace in the Hecke algebra.
LaurentPoly2 homfly_vz(const ArtinWord& w, hecke::Exec exec = hecke::Exec::parallel);

/// Longest word accepted by homfly_oracle.
inline constexpr std::size_t kOracleMaxLength = 14;

/// Independent reference: unmemoised skein tree that switches the first
/// crossing met from below on a based traversal until the diagram is
/// descending (an unlink).
LaurentPoly2 homfly_oracle(const ArtinWord& w);

/// Largest z exponent among the stored terms. Throws on the zero polynomial.
int max_z_degree(const LaurentPoly2& p);

/// Half the top z-degree of the HOMFLY-PT polynomial of a knot closure.
int gc_lower_bound(const ArtinWord& w, hecke::Exec exec = hecke::Exec::parallel);

int torus_knot_genus(int p, int q);
/// k * g(T(p,q)) + g(T(k,l)).
int cable_genus(int p, int q, int k, int l);

enum class Verdict { not_canonically_fibered, inconclusive };

struct SurveyRow {
  int n = 0;
  std::size_t cable_word_length = 0;
  int genus = 0;
  int gc_lower_bound = 0;
  Verdict verdict = Verdict::inconclusive;
  /// Non-empty when the engine failed for this row.
  std::string error;
};

/// Rows for the (2,1)-cable of T(2,2n+1), n = 1..max_n. Rows are evaluated
/// independently; a failing row is reported, not thrown.
std::vector<SurveyRow> survey(int max_n, hecke::Exec exec = hecke::Exec::parallel);

std::string to_string(Verdict v);
/// "n<TAB>genus<TAB>bound<TAB>verdict".
std::string format_survey_row(const SurveyRow& row);

}  // namespace knotkit
