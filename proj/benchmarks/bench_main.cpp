#include <benchmark/benchmark.h>

#include "mwl/derive.hpp"
#include "mwl/heights.hpp"
#include "mwl/io.hpp"

using namespace mwl;

static void BM_ResultantE13(benchmark::State& state) {
    // the (1,3) eliminant: Res_b of the two residual equations
    for (auto _ : state) {
        CoefficientSystem sys = system_for(SurfaceModel(1, 3));
        benchmark::DoNotOptimize(fundamental_polynomial(sys, "a"));
    }
}
BENCHMARK(BM_ResultantE13);

static void BM_FundpolyE14(benchmark::State& state) {
    for (auto _ : state) {
        CoefficientSystem sys = system_for(SurfaceModel(1, 4));
        benchmark::DoNotOptimize(fundamental_polynomial(sys, "U"));
    }
}
BENCHMARK(BM_FundpolyE14);

static void BM_TowerMulZeta24(benchmark::State& state) {
    TowerPtr t = tower_k4();
    TowerElement w = t->gen("w"), z = t->gen("z24");
    TowerElement x = (w + z).pow(3) + w * z * Rational(7, 3);
    TowerElement y = (w - z).pow(2) + z.pow(5) * Rational(2);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_TowerMulZeta24);

static void BM_TowerInverse(benchmark::State& state) {
    TowerPtr t = tower_k4();
    TowerElement x = t->gen("w") + t->gen("z24") * Rational(3) + t->one();
    for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_TowerInverse);

static void BM_BareissM10(benchmark::State& state) {
    GramMatrix m = fixture_m10();
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_BareissM10);

static void BM_GramM1(benchmark::State& state) {
    auto basis = derive_basis(SurfaceModel(2, 1));
    for (auto _ : state) benchmark::DoNotOptimize(gram(basis.sections));
}
BENCHMARK(BM_GramM1);

BENCHMARK_MAIN();
