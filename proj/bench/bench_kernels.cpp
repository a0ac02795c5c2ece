// Copyright 2026 The rankmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "rankmetric/kernels.hpp"
#include "rankmetric/matrix.hpp"
#include "rankmetric/ramsey.hpp"

namespace {

using rankmetric::FieldSpec;
using rankmetric::Matrix;
namespace k = rankmetric::kernels;

Matrix sample(int q, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rankmetric::random_matrix(FieldSpec::builtin(q), n, n, rng);
}

template <Matrix (*Mul)(const Matrix&, const Matrix&)>
void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const Matrix a = sample(q, n, 1), b = sample(q, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(state.range(0));
}

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const Matrix base = sample(q, n, 3);
  for (auto _ : state) {
    state.PauseTiming();
    Matrix m = base;
    state.ResumeTiming();
    benchmark::DoNotOptimize(Rref(m));
  }
}

template <Matrix (*Kron)(const Matrix&, const Matrix&)>
void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix x = sample(2, n, 4), y = sample(2, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(Kron(x, y));
}

template <bool Parallel>
void BM_census(benchmark::State& state) {
  const auto f2 = FieldSpec::builtin(2);
  for (auto _ : state) {
    auto c = Parallel ? rankmetric::copy_census(f2, 2, 4) : rankmetric::copy_census_serial(f2, 2, 4);
    benchmark::DoNotOptimize(c.copies.size());
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int q : {2, 4, 7})
    for (int n : {64, 128, 256}) b->Args({n, q});
}

}  // namespace

BENCHMARK(BM_multiply<k::multiply_serial>)->Name("multiply/serial")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply<k::multiply_parallel>)->Name("multiply/parallel")->Apply(sizes)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_rref<k::rref_serial>)->Name("rref/serial")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref<k::rref_parallel>)->Name("rref/parallel")->Apply(sizes)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_kron<k::kron_serial>)->Name("kron/serial")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kron<k::kron_parallel>)->Name("kron/parallel")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_census<false>)->Name("census_2_4/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census<true>)->Name("census_2_4/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
