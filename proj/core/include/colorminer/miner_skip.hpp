#pragma once

#include <cstdint>
#include <vector>

#include "colorminer/bitvector.hpp"
#include "colorminer/colored_string.hpp"
#include "colorminer/indexed_max_pq.hpp"
#include "colorminer/mine_options.hpp"
#include "colorminer/suffix_tree.hpp"

namespace colorminer {

/*
 * Skipping engine: instead of sweeping every delay, a max-priority queue
 * holds, per tree node, an upper bound on the largest delay at which the
 * node can still be uniform. Extracting the maximum visits exactly the
 * (node, delay) pairs where the flag flips, so delays with no change are
 * skipped wholesale.
 */

struct SkipStats {
    int64_t extractions = 0;
    int64_t max_extractions_per_node = 0;
    int64_t bound_evaluations = 0;
    int32_t node_count = 0;
};

// True when the pattern at node u has a second occurrence that still
// fits delay d inside the string: at least two leaves below u, and the
// second-largest forward end e2 satisfies e2 + d <= n.
bool passes_real_filter(const SuffixTree& st, int32_t u, int32_t d);

// Largest d' < ell at which node u can be uniform: for a leaf, the
// largest delay in [0, ell-1] that lands its suffix on a set bit of bv;
// for an internal node, the minimum over children of their bounds under
// the same ell. Every node visited has its queue key lowered to the
// value computed for it. Returns -1 when no nonnegative delay works.
int32_t delay_bound(const SuffixTree& st, const ColorBitvector& bv,
                    IndexedMaxPQ& ipq, int32_t u, int32_t ell,
                    SkipStats* stats = nullptr);

// Same, except a node all of whose children are leaves is re-keyed to
// the exact largest delay uniform across those leaves, found by lowering
// a candidate until every leaf bound agrees. Only sound when reports are
// restricted by the real-occurrence filter.
int32_t delay_bound_fast(const SuffixTree& st, const ColorBitvector& bv,
                         IndexedMaxPQ& ipq, int32_t u, int32_t ell,
                         SkipStats* stats = nullptr);

// Minimal uniform-delay substrings by repeated max extraction. Agrees
// with sweep_minimal on every input; opts.fast_bound additionally
// requires opts.real_filter. Output is sorted by delay descending, then
// by pattern text.
std::vector<ReportEntry> skipping_mine(const ColoredString& cs, int32_t y,
                                       const MineOptions& opts = {},
                                       SkipStats* stats = nullptr);

}  // namespace colorminer
