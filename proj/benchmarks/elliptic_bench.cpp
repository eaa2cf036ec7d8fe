// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "skly/elliptic.hpp"
#include "skly/sklyanin.hpp"

using namespace skly;

namespace {
const CurvePtr curve = LatticeCurve::make(cplx(0, 1.2));
}

static void BM_WFunctions(benchmark::State& state) {
    cplx lam(0.23, 0.31);
    for (auto _ : state) {
        auto w = w_functions(lam, *curve);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_WFunctions);

static void BM_JacobiSnCnDn(benchmark::State& state) {
    for (auto _ : state) {
        auto v = jacobi_sn_cn_dn(cplx(0.4, 0.2), cplx(0.5, 0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_JacobiSnCnDn);

static void BM_LaurentResidue(benchmark::State& state) {
    auto f = [](cplx z) {
        auto [w1, w2, w3] = w_functions(z, *curve);
        return w1;
    };
    LaurentOptions opt;
    opt.radius = curve->torsion_separation() / 4.0;
    opt.samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = laurent_coefficients(f, cplx(0, 0), -1, -1, opt);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_LaurentResidue)->Arg(64)->Arg(256);

static void BM_BivectorPoi3(benchmark::State& state) {
    EndomorphismPoint p{{cplx(0.3, 0.1), cplx(1.0, 0), cplx(0, 0.2), cplx(-0.4, 0)}, curve};
    for (auto _ : state) {
        BivectorMatrix pi = bivector_poi3(p);
        benchmark::DoNotOptimize(pi);
    }
}
BENCHMARK(BM_BivectorPoi3);

BENCHMARK_MAIN();
