// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

// Serial DFS oracle against the parallel prefix-split kernel.

#include <random>

#include <benchmark/benchmark.h>

#include "sdg/generators.hpp"
#include "sdg/oracle.hpp"

namespace {

sdg::SocialNetwork instance(int n) {
  std::mt19937_64 rng(42);
  return sdg::random_partial_ktree(n, 3, 0.7, rng);
}

void run(benchmark::State& state, bool parallel, sdg::Mode mode) {
  const auto g = instance(static_cast<int>(state.range(0)));
  const auto s = sdg::ScoringVector::parse("1,1,-1", sdg::Tail::closed);
  sdg::OracleOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(sdg::brute_force_solve(s, g, mode, opts));
  state.SetLabel(parallel ? "parallel" : "serial");
}

void BM_OracleSerialWelfare(benchmark::State& st) { run(st, false, sdg::Mode::welfare); }
void BM_OracleParallelWelfare(benchmark::State& st) { run(st, true, sdg::Mode::welfare); }
void BM_OracleSerialNs(benchmark::State& st) { run(st, false, sdg::Mode::ns); }
void BM_OracleParallelNs(benchmark::State& st) { run(st, true, sdg::Mode::ns); }

BENCHMARK(BM_OracleSerialWelfare)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallelWelfare)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerialNs)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallelNs)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
