#include <benchmark/benchmark.h>

#include "sinv/boundary.hpp"
#include "sinv/generators.hpp"
#include "sinv/smith.hpp"

using namespace sinv;

static void BM_snf_cp2_del3(benchmark::State& state) {
    IntegerRing z;
    auto c = cp2_9();
    auto m = boundary_matrix(z, c, 3);
    for (auto _ : state) {
        auto result = smith_normal_form(z, m, state.range(0) != 0);
        benchmark::DoNotOptimize(result.rank());
    }
}
BENCHMARK(BM_snf_cp2_del3)->Arg(0)->Arg(1);

static void BM_snf_s2xs2_del3(benchmark::State& state) {
    IntegerRing z;
    auto c = s2xs2();
    auto m = boundary_matrix(z, c, 3);
    for (auto _ : state) {
        auto result = smith_normal_form(z, m, false);
        benchmark::DoNotOptimize(result.rank());
    }
}
BENCHMARK(BM_snf_s2xs2_del3);

static void BM_field_rank_mod2(benchmark::State& state) {
    PrimeField f2(2);
    auto c = s2xs2();
    auto m = boundary_matrix(f2, c, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field_rank(f2, m));
    }
}
BENCHMARK(BM_field_rank_mod2);

static void BM_column_space_member(benchmark::State& state) {
    IntegerRing z;
    auto c = cp2_9();
    auto m = boundary_matrix(z, c, 3);
    Chain<IntegerRing> top(3);
    top.add_term(z, Simplex{0, 1, 2, 3}, 1);
    auto v = chain_to_vector(z, c, boundary_of(z, top));
    for (auto _ : state) {
        benchmark::DoNotOptimize(column_space_member(z, m, v));
    }
}
BENCHMARK(BM_column_space_member);

BENCHMARK_MAIN();
