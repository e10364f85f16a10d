#pragma once

#include <cstdint>
#include <vector>

#include "colorminer/colored_string.hpp"

namespace colorminer {

/*
 * Brute-force reference implementation, quadratic/cubic and limited to
 * small inputs (n <= 256, throws TooLarge beyond). It never touches the
 * suffix tree, so agreement with the engines is meaningful evidence.
 */

// Every (pattern, delay) pair with a uniform delay, d in [0, d_max]
// (d_max < 0 means n), sorted delay ascending then by pattern text.
// Mirrors sweep_all_unique.
std::vector<ReportEntry> oracle_all_unique(const ColoredString& cs, int32_t y,
                                           int32_t d_max = -1);

// Minimal uniform-delay substrings by definition: a pair qualifies when
// the pattern is uniform at d and no proper substring is uniform at the
// delay shifted to keep the same checked position. A shifted delay past
// n blocks (the shorter substring is then trivially uniform). For
// single characters the only shorter string is empty; that blocks
// exactly when the whole suffix f[d..n] is colored y. Sorted delay
// descending then by pattern text. Mirrors sweep_minimal / skipping_mine
// with default options.
std::vector<ReportEntry> oracle_minimal(const ColoredString& cs, int32_t y,
                                        int32_t max_delay = -1);

// oracle_minimal restricted to patterns with a second occurrence that
// fits the delay inside the string. Mirrors the engines' real filter.
std::vector<ReportEntry> oracle_real(const ColoredString& cs, int32_t y,
                                     int32_t max_delay = -1);

}  // namespace colorminer
