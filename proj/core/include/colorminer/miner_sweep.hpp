#pragma once

#include <cstdint>
#include <vector>

#include "colorminer/colored_string.hpp"
#include "colorminer/mine_options.hpp"
#include "colorminer/suffix_tree.hpp"

namespace colorminer {

/*
 * Baseline engine: one suffix-tree sweep per delay value.
 *
 * Each round evaluates, for every tree node, whether all suffixes under
 * it see color y exactly d positions after the pattern ends (running off
 * the end of the string counts as a hit). That flag is an AND over leaf
 * conditions, so one bottom-up pass per round settles every node.
 */

struct SweepStats {
    int64_t rounds = 0;
    int64_t node_visits = 0;
    int64_t max_visits_per_round = 0;
    int32_t node_count = 0;
};

// Every uniform-delay substring, not just the minimal ones: for each
// d in [0, d_max] and each tree node whose flag is set, all substrings
// on the node's edge are reported. d_max < 0 means d_max = n. Output is
// sorted by delay ascending, then by pattern text.
std::vector<ReportEntry> sweep_all_unique(const ColoredString& cs, int32_t y,
                                          int32_t d_max,
                                          SweepStats* stats = nullptr);

// Minimal uniform-delay substrings via two adjacent rounds: a node whose
// flag is set while its parent's is not names a candidate (shortest
// substring on its edge); the candidate survives if trimming one
// character from the right is not uniform at delay d+1, read off the
// previous round's flags at the suffix-link locus. Delays are processed
// from n down to 0 so that round d+1 is always the previous one. Output
// is sorted by delay descending, then by pattern text.
std::vector<ReportEntry> sweep_minimal(const ColoredString& cs, int32_t y,
                                       const MineOptions& opts = {},
                                       SweepStats* stats = nullptr);

}  // namespace colorminer
