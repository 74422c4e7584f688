#include <quintic/index_sets.hpp>

#include <benchmark/benchmark.h>

using namespace quintic;

static void BM_enumerate_restricted(benchmark::State& state) {
    GdKey key{2, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_restricted_pair_set(key, [&](const PairSet&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_restricted)->Arg(1)->Arg(2)->Arg(3);

static void BM_exterior_predicate(benchmark::State& state) {
    for (auto _ : state) {
        bool any = false;
        for (int g = 1; g <= 6; ++g)
            for (int d = 1; d <= 3; ++d) any ^= has_exterior_element({g, d});
        benchmark::DoNotOptimize(any);
    }
}
BENCHMARK(BM_exterior_predicate);

BENCHMARK_MAIN();
