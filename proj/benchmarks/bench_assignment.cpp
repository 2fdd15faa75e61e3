// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "dropin/assignment.hpp"

namespace {

dropin::ScoreMatrix random_matrix(std::size_t rows, std::size_t cols, double forbidden_share) {
  std::mt19937_64 rng(rows * 131 + cols);
  std::uniform_real_distribution<double> score(-1.0, 1.0), coin(0.0, 1.0);
  dropin::ScoreMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) >= forbidden_share) m(i, j) = score(rng);
  return m;
}

void BM_OptimizeSquare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(dropin::optimize(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimizeSquare)->RangeMultiplier(2)->Range(4, 128)->Complexity();

// Typical method maps are wide: a handful of query methods against a larger
// candidate.
void BM_OptimizeWide(benchmark::State& state) {
  const auto m = random_matrix(8, static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(dropin::optimize(m));
}
BENCHMARK(BM_OptimizeWide)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
