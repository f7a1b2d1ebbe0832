// Copyright 2026 The symmap Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "symmap/bipartite.hpp"
#include "symmap/geomeasure.hpp"
#include "symmap/mapping.hpp"
#include "symmap/parallel.hpp"
#include "symmap/search.hpp"
#include "symmap/subspace.hpp"

namespace {

using namespace symmap;

SymmetricState random_state(int n, std::uint64_t seed) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(n));
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = Complex(normal(rng), normal(rng));
    return SymmetricState::normalized(std::move(c));
}

void BM_MapPure(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    SymmetricState psi = random_state(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(map_pure(psi));
}
BENCHMARK(BM_MapPure)->Arg(4)->Arg(12)->Arg(30)->Arg(60);

void BM_Schmidt(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    BipartiteSymmetricState psi = map_pure(random_state(n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(schmidt(psi));
}
BENCHMARK(BM_Schmidt)->Arg(12)->Arg(30)->Arg(60);

void BM_GeometricMeasure(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    SymmetricState psi = random_state(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(geometric_measure(psi));
}
BENCHMARK(BM_GeometricMeasure)->Arg(4)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_PptThreshold(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ppt_threshold([n](double p) { return map_mixed(w_mixture(n, p)); }, 0.0, 1.0));
}
BENCHMARK(BM_PptThreshold)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Gd(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(g_d(d, 32, 0));
}
BENCHMARK(BM_Gd)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ProxySearch(benchmark::State &state) {
    SearchConfig config;
    config.n_qubits = static_cast<int>(state.range(0));
    config.n_restarts = 20;
    config.proxy = state.range(1) ? Proxy::Determinant : Proxy::PurityDeficit;
    for (auto _ : state) benchmark::DoNotOptimize(optimize_proxy(config));
}
BENCHMARK(BM_ProxySearch)->Args({8, 0})->Args({8, 1})->Args({20, 0})->Args({20, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
