/*
 * Copyright 2026 The roabp-order Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "roabp/linalg.hpp"
#include "roabp/nisan.hpp"
#include "roabp/roabp.hpp"

using namespace roabp;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  PrimeField f;
  Rng rng(seed);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.random(rng);
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, n, 1);
  PrimeField f;
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m, f));
}

void BM_RankParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, n, 1);
  PrimeField f;
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m, f));
}

DensePoly sampled(int n) {
  PrimeField f;
  Rng rng(7);
  return roabp_to_dense(sample_random_roabp(f, n, 2, 4, Order::identity(n), rng));
}

void BM_SubsetTableSerial(benchmark::State& state) {
  auto g = sampled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_rank_table_serial(g));
}

void BM_SubsetTableParallel(benchmark::State& state) {
  auto g = sampled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_rank_table(g));
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetTableSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetTableParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
