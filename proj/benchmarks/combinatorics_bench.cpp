// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "skly/leaves.hpp"
#include "skly/poisson.hpp"

using namespace skly;

static void BM_LrCoefficient(benchmark::State& state) {
    Partition lam({4, 3, 2, 1}), mu({3, 2}), nu({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lam, mu, nu));
}
BENCHMARK(BM_LrCoefficient);

static void BM_EnumerateStrata(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto s = enumerate_strata(r, k);
        benchmark::DoNotOptimize(s);
    }
    state.SetLabel(std::to_string(enumerate_strata(r, k).size()) + " types");
}
BENCHMARK(BM_EnumerateStrata)->Args({2, 2})->Args({3, 2})->Args({4, 3});

static void BM_SchoutenResidual(benchmark::State& state) {
    auto [c1, c2] = sklyanin_casimirs();
    QuadraticBivector b = QuadraticBivector::from_casimirs(c1, c2);
    for (auto _ : state) {
        auto res = schouten_jacobi_residual(b);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SchoutenResidual);

static void BM_PartitionRoundTrip(benchmark::State& state) {
    auto parts = all_partitions(12);
    for (auto _ : state) {
        for (const auto& lam : parts)
            benchmark::DoNotOptimize(lengths_to_partition(partition_to_lengths(lam, 13)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}
BENCHMARK(BM_PartitionRoundTrip);

BENCHMARK_MAIN();
