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

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>

#include "knotkit/braid.hpp"
#include "knotkit/hecke.hpp"
#include "knotkit/homfly.hpp"

using namespace knotkit;

namespace {

hecke::Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? hecke::Exec::serial : hecke::Exec::parallel;
}

ArtinWord random_word(int strands, int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  for (int t = 0; t < length; ++t) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return ArtinWord(std::move(letters), strands);
}

void BM_RightMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::Exec exec = exec_of(state);
  const ArtinWord w = random_word(n, 12, 7);
  for (auto _ : state) {
    auto x = hecke::Element::identity(n);
    for (int letter : w.letters()) hecke::right_multiply(x, std::abs(letter), letter > 0 ? 1 : -1, exec);
    benchmark::DoNotOptimize(x.coeffs.data());
  }
}

void BM_TraceLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::Exec exec = exec_of(state);
  hecke::TraceTable lower = hecke::TraceTable::base();
  for (int k = 2; k < n; ++k) lower = hecke::TraceTable::next_level(lower, hecke::Exec::serial);
  for (auto _ : state) {
    auto table = hecke::TraceTable::next_level(lower, exec);
    benchmark::DoNotOptimize(table.size());
  }
}

void BM_HomflyCable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::Exec exec = exec_of(state);
  const ArtinWord w = cable_word(torus_knot_braid_word(2, 2 * n + 1), 2, 1);
  hecke::TraceTable::get(w.strands(), exec);
  for (auto _ : state) benchmark::DoNotOptimize(homfly_vz(w, exec).term_count());
}

}  // namespace

BENCHMARK(BM_RightMultiply)->ArgNames({"strands", "parallel"})->ArgsProduct({{5, 6, 7}, {0, 1}});
BENCHMARK(BM_TraceLevel)->ArgNames({"strands", "parallel"})->ArgsProduct({{5, 6, 7}, {0, 1}});
BENCHMARK(BM_HomflyCable)->ArgNames({"n", "parallel"})->ArgsProduct({{5, 10, 20}, {0, 1}});

BENCHMARK_MAIN();
