#include <quintic/fiber.hpp>

#include <benchmark/benchmark.h>

using namespace quintic;

static void BM_connected_invariant(benchmark::State& state) {
    FiberSpec spec;
    spec.mu = 7;
    spec.rel_h_power = 1;
    spec.insertions = {{1, 3}, {0, 2}, {0, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(connected_fiber_invariant(spec));
}
BENCHMARK(BM_connected_invariant);

static void BM_pairing_diagonal_repeats(benchmark::State& state) {
    // worst-case symmetry: many identical weight-1 pairs on both sides
    auto n = state.range(0);
    std::vector<IntegerPair> pairs(static_cast<std::size_t>(n), IntegerPair{0, 1});
    PairSet z(pairs);
    for (auto _ : state)
        benchmark::DoNotOptimize(disconnected_fiber_pairing(z, z));
}
BENCHMARK(BM_pairing_diagonal_repeats)->Arg(5)->Arg(9);

static void BM_pairing_merge(benchmark::State& state) {
    PairSet rho({{7, 2}});
    PairSet zeta({{6, 0}, {1, 0}, {1, 0}, {0, 1}});
    for (auto _ : state)
        benchmark::DoNotOptimize(disconnected_fiber_pairing(rho, zeta));
}
BENCHMARK(BM_pairing_merge);
