#pragma once

#include <cstdint>
#include <iosfwd>

namespace colorminer {

/*
 * Knobs shared by both mining engines. Defaults give the full minimal
 * report: every minimally unique substring, regardless of how many real
 * occurrences back it.
 */
struct MineOptions {
    // keep only patterns with at least two occurrences whose second-best
    // occurrence still fits the delay inside the string
    bool real_filter = false;

    // use the tighter all-leaf re-keying rule in the skipping engine;
    // only sound together with real_filter
    bool fast_bound = false;

    // drop reports with delay greater than this; negative means no cap
    int32_t max_delay = -1;

    // fill ReportEntry::end_positions (costs an extra pass per report)
    bool collect_end_positions = false;

    // when set, the skipping engine writes one line per extraction here
    std::ostream* debug_trace = nullptr;
};

}  // namespace colorminer
