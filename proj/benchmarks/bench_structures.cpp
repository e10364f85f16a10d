#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "colorminer/bitvector.hpp"
#include "colorminer/colored_string.hpp"
#include "colorminer/indexed_max_pq.hpp"
#include "colorminer/range_top2.hpp"
#include "colorminer/suffix_tree.hpp"

using namespace colorminer;

static void BM_BitvectorRank(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 2, 2, 42);
    const auto bv = build_color_bitvector(cs, 0);
    int64_t i = 0;
    for (auto _ : state) {
        i = i % n + 1;
        benchmark::DoNotOptimize(bv.rank1(i));
    }
}
BENCHMARK(BM_BitvectorRank)->Range(1 << 10, 1 << 16);

static void BM_BitvectorSelect(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 2, 2, 42);
    const auto bv = build_color_bitvector(cs, 0);
    const int64_t ones = bv.rank1(bv.size());
    if (ones == 0) {
        state.SkipWithError("instance has no set bits");
        return;
    }
    int64_t k = 0;
    for (auto _ : state) {
        k = k % ones + 1;
        benchmark::DoNotOptimize(bv.select1(k));
    }
}
BENCHMARK(BM_BitvectorSelect)->Range(1 << 10, 1 << 16);

// Insert every index, then drain by repeated peek-and-demote, the access
// pattern the skipping engine drives the queue with.
static void BM_QueueDrain(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    SplitMix64 rng(7);
    std::vector<int32_t> keys(n);
    for (auto& k : keys) k = static_cast<int32_t>(rng.next() % 32);
    for (auto _ : state) {
        state.PauseTiming();
        IndexedMaxPQ pq(n);
        for (int32_t i = 0; i < n; ++i) pq.insert(i, keys[i]);
        state.ResumeTiming();
        while (!pq.all_negative()) {
            const auto [i, k] = pq.max();
            pq.demote(i, k - 1 - i % 3);
        }
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_QueueDrain)->Range(1 << 8, 1 << 14);

static void BM_RangeTopTwo(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    SplitMix64 rng(3);
    std::vector<int32_t> values(n);
    for (auto& v : values) v = static_cast<int32_t>(rng.next() % 1000);
    const RangeTop2 rt(values);
    std::vector<std::pair<int32_t, int32_t>> queries(1024);
    for (auto& q : queries) {
        int32_t lo = 1 + static_cast<int32_t>(rng.next() % n);
        int32_t hi = 1 + static_cast<int32_t>(rng.next() % n);
        if (lo > hi) std::swap(lo, hi);
        q = {lo, hi};
    }
    size_t qi = 0;
    for (auto _ : state) {
        const auto& q = queries[qi++ & 1023];
        benchmark::DoNotOptimize(rt.top2(q.first, q.second));
    }
}
BENCHMARK(BM_RangeTopTwo)->Range(1 << 10, 1 << 16);

static void BM_SuffixTreeBuild(benchmark::State& state) {
    const int32_t n = static_cast<int32_t>(state.range(0));
    const auto cs = gen_random(n, 8, 2, 11);
    for (auto _ : state) {
        const auto st = SuffixTree::build(cs);
        benchmark::DoNotOptimize(st.node_count());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SuffixTreeBuild)->Range(1 << 8, 1 << 14);

BENCHMARK_MAIN();
