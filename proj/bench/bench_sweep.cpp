#include <benchmark/benchmark.h>

#include "heckelr/sweep.hpp"

namespace {

void BM_BatchSerial(benchmark::State& state)
{
    const auto pairs = heckelr::sweep_pairs(state.range(0), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(heckelr::batch_records_serial(pairs));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

void BM_BatchParallel(benchmark::State& state)
{
    const auto pairs = heckelr::sweep_pairs(state.range(0), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(heckelr::batch_records_parallel(pairs, static_cast<int>(state.range(1))));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

} // namespace

BENCHMARK(BM_BatchSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Args({6, 2})->Args({8, 2})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
