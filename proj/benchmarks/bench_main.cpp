#include <benchmark/benchmark.h>

#include "ebinom/exact_core.hpp"
#include "ebinom/expansion.hpp"
#include "ebinom/harness.hpp"

// Exact row cost grows like n^2 q bignum additions.
static void BM_ComputeRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ebinom::compute_row(n, q));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeRow)->ArgsProduct({{100, 200, 400, 800, 1600}, {2}})->Complexity();

static void BM_BuildQEven(benchmark::State& state) {
    const int nu = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ebinom::build_q_even(nu, 3));
}
BENCHMARK(BM_BuildQEven)->DenseRange(1, 6);

// One exact evaluation (from a row that has to be built) versus one
// asymptotic evaluation at the same point.
static void BM_ExactPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ebinom::exact_scaled(n, n, 2));
}
BENCHMARK(BM_ExactPoint)->Arg(100)->Arg(400)->Arg(1600);

static void BM_ExpansionPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ebinom::TruncatedExpansion expansion(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(expansion(n, n));
}
BENCHMARK(BM_ExpansionPoint)->Arg(100)->Arg(400)->Arg(1600);

static void BM_UniformError(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ebinom::uniform_error(n, 2, 1));
}
BENCHMARK(BM_UniformError)->Arg(50)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
