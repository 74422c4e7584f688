#include <quintic/solver.hpp>

#include <benchmark/benchmark.h>

using namespace quintic;

static void BM_solve_coefficients_g2(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GdKey key{2, d};
    PairSet zeta = principal_zeta(key);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_coefficients(key, zeta));
}
BENCHMARK(BM_solve_coefficients_g2)->Arg(1)->Arg(4)->Arg(8);

static void BM_solve_coefficients_g3(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GdKey key{3, d};
    PairSet zeta = principal_zeta(key);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_coefficients(key, zeta));
}
BENCHMARK(BM_solve_coefficients_g3)->Arg(1)->Arg(4)->Arg(8);

static void BM_build_fmatrix_21(benchmark::State& state) {
    GdKey key{2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(build_fmatrix(key));
}
BENCHMARK(BM_build_fmatrix_21);
