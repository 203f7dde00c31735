#include <benchmark/benchmark.h>

#include "sinv/generators.hpp"
#include "sinv/homology.hpp"
#include "sinv/manifold.hpp"
#include "sinv/morse.hpp"

using namespace sinv;

// arg 0: raw strategy, 1: greedy-morse pre-reduction.
static void BM_homology_cp2(benchmark::State& state) {
    IntegerRing z;
    auto c = cp2_9();
    HomologyOptions options;
    options.strategy = state.range(0) ? Strategy::morse : Strategy::raw;
    for (auto _ : state) {
        auto result = homology(z, c, options);
        benchmark::DoNotOptimize(result.degrees.size());
    }
}
BENCHMARK(BM_homology_cp2)->Arg(0)->Arg(1);

static void BM_homology_s2xs2(benchmark::State& state) {
    IntegerRing z;
    auto c = s2xs2();
    HomologyOptions options;
    options.strategy = state.range(0) ? Strategy::morse : Strategy::raw;
    for (auto _ : state) {
        auto result = homology(z, c, options);
        benchmark::DoNotOptimize(result.degrees.size());
    }
}
BENCHMARK(BM_homology_s2xs2)->Arg(0)->Arg(1);

static void BM_homology_with_reps_cp2(benchmark::State& state) {
    IntegerRing z;
    auto c = cp2_9();
    HomologyOptions options;
    options.with_reps = true;
    for (auto _ : state) {
        auto result = homology(z, c, options);
        benchmark::DoNotOptimize(result.degrees.size());
    }
}
BENCHMARK(BM_homology_with_reps_cp2);

static void BM_greedy_matching(benchmark::State& state) {
    auto c = state.range(0) ? s2xs2() : cp2_9();
    for (auto _ : state) {
        auto m = greedy_matching(c);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_greedy_matching)->Arg(0)->Arg(1);

static void BM_stiefel_whitney_cp2(benchmark::State& state) {
    auto c = cp2_9();
    for (auto _ : state) {
        auto report = stiefel_whitney_classes(c);
        benchmark::DoNotOptimize(report.classes.size());
    }
}
BENCHMARK(BM_stiefel_whitney_cp2);

static void BM_intersection_form_s2xs2(benchmark::State& state) {
    auto c = s2xs2();
    for (auto _ : state) {
        auto report = intersection_form(c);
        benchmark::DoNotOptimize(report.signature);
    }
}
BENCHMARK(BM_intersection_form_s2xs2);

BENCHMARK_MAIN();
