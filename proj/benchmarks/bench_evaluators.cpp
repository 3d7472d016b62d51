// Wall-clock companions to the operation counters reported by `recsum bench`.
// The counters are what acceptance relies on; these exist to eyeball the
// constant factors.

#include <benchmark/benchmark.h>

#include "recsum/engine.hpp"
#include "recsum/harness.hpp"
#include "recsum/zeta.hpp"

using namespace recsum;

namespace {

RecurrentSumSpec power_spec(int m, long n) {
    return RecurrentSumSpec::same(m, 1, n, SeqSpec::power(1));
}

void BM_EvalNaive(benchmark::State& state) {
    const auto spec = power_spec(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        auto value = eval_naive(spec);
        benchmark::DoNotOptimize(value);
    }
    state.SetLabel(naive_tuple_count(spec).get_str() + " tuples");
}
BENCHMARK(BM_EvalNaive)->Args({3, 20})->Args({4, 20})->Args({5, 20})->Args({6, 20});

void BM_EvalIncremental(benchmark::State& state) {
    const auto spec = power_spec(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        auto value = eval_incremental(spec);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_EvalIncremental)->Args({3, 20})->Args({6, 20})->Args({6, 100});

void BM_EvalReduced(benchmark::State& state) {
    const auto spec = power_spec(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        auto value = eval_reduced(spec);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_EvalReduced)->Args({3, 20})->Args({6, 20})->Args({6, 100})->Args({10, 200});

void BM_EvalGeneralReduced(benchmark::State& state) {
    const auto spec = power_spec(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        auto value = eval_general_reduced(spec);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_EvalGeneralReduced)->Args({3, 20})->Args({5, 20});

void BM_RecurrentZetaStar(benchmark::State& state) {
    for (auto _ : state) {
        auto value = recurrent_zeta_star_even(static_cast<int>(state.range(0)), 1);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_RecurrentZetaStar)->Arg(4)->Arg(8)->Arg(12);

void BM_PartitionEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        auto list = enumerate_partitions(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(list);
    }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(10)->Arg(20)->Arg(30);

} // namespace

BENCHMARK_MAIN();
