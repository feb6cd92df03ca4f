#include <benchmark/benchmark.h>

#include "b2weight/construction.hpp"
#include "b2weight/oracle.hpp"
#include "b2weight/sidon.hpp"

using namespace b2weight;

static void BM_BoseSidonSet(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bose_sidon_set(q).elements.size());
    }
}
BENCHMARK(BM_BoseSidonSet)->Arg(31)->Arg(101)->Arg(251);

static void BM_BuildCodebook(benchmark::State& state) {
    const CodeParameters params(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_codebook(params).size());
    }
}
BENCHMARK(BM_BuildCodebook)->Args({20, 5})->Args({32, 8});

static void BM_VerifyB2(benchmark::State& state) {
    const Codebook cb = build_codebook(CodeParameters(32, 8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_b2(cb).has_value());
    }
}
BENCHMARK(BM_VerifyB2);

static void BM_MapUnmapRoundTrip(benchmark::State& state) {
    const CodeParameters params(32, 8);  // map values range over [0, 4^8)
    for (auto _ : state) {
        const BinaryVector v = unmap(FValue(54321), params);
        benchmark::DoNotOptimize(map_f(v, params));
    }
}
BENCHMARK(BM_MapUnmapRoundTrip);

static void BM_ExhaustiveSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int omega = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_max_b2(n, omega).max_size);
    }
}
BENCHMARK(BM_ExhaustiveSearch)->Args({6, 2})->Args({6, 3})->Args({7, 2});

BENCHMARK_MAIN();
