#include <benchmark/benchmark.h>

#include <cstdint>

#include "colorminer/colored_string.hpp"
#include "colorminer/mine_options.hpp"
#include "colorminer/miner_skip.hpp"
#include "colorminer/miner_sweep.hpp"

using namespace colorminer;

// All engine benchmarks mine color 0 of the same random instance family
// so their times are directly comparable at each length.

static void BM_SweepFull(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 8, 42);
    for (auto _ : state) {
        const auto rows = sweep_minimal(cs, 0);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SweepFull)->RangeMultiplier(4)->Range(256, 4096);

static void BM_SkipFull(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 8, 42);
    for (auto _ : state) {
        const auto rows = skipping_mine(cs, 0);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SkipFull)->RangeMultiplier(4)->Range(256, 4096);

static void BM_SweepReal(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 8, 42);
    MineOptions opts;
    opts.real_filter = true;
    for (auto _ : state) {
        const auto rows = sweep_minimal(cs, 0, opts);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SweepReal)->RangeMultiplier(4)->Range(256, 4096);

static void BM_SkipReal(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 8, 42);
    MineOptions opts;
    opts.real_filter = true;
    for (auto _ : state) {
        const auto rows = skipping_mine(cs, 0, opts);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SkipReal)->RangeMultiplier(4)->Range(256, 4096);

static void BM_SkipFastReal(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 8, 42);
    MineOptions opts;
    opts.real_filter = true;
    opts.fast_bound = true;
    for (auto _ : state) {
        const auto rows = skipping_mine(cs, 0, opts);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SkipFastReal)->RangeMultiplier(4)->Range(256, 4096);
