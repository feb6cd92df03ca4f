#include <benchmark/benchmark.h>

#include "b2weight/entropy_bounds.hpp"
#include "b2weight/split_bounds.hpp"

using namespace b2weight;

static void BM_ClosedFormRow(benchmark::State& state) {
    const WeightFraction w(0.345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_sum_entropy(w).value);
        benchmark::DoNotOptimize(bound_diff_entropy(w).value);
    }
}
BENCHMARK(BM_ClosedFormRow);

static void BM_ObjectiveImproved(benchmark::State& state) {
    const WeightFraction w(0.345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(objective_improved(0.55, 0.2, w));
    }
}
BENCHMARK(BM_ObjectiveImproved);

static void BM_BoundPrefixSuffix(benchmark::State& state) {
    const WeightFraction w(0.345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_prefix_suffix(w).value);
    }
}
BENCHMARK(BM_BoundPrefixSuffix);

static void BM_BoundImproved(benchmark::State& state) {
    const WeightFraction w(0.345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_improved(w).value);
    }
}
BENCHMARK(BM_BoundImproved);

static void BM_BoundImprovedCoarseOnly(benchmark::State& state) {
    const WeightFraction w(0.345);
    const OptimizerOptions opts{1e-3, 0, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_improved(w, opts).value);
    }
}
BENCHMARK(BM_BoundImprovedCoarseOnly);

BENCHMARK_MAIN();
