#pragma once

#include <cstdint>
#include <iosfwd>

namespace colorminer {

/*
 * Randomized cross-validation: a deterministic stream of instances, each
 * mined by every engine and compared against the oracle. Used by the
 * check subcommand and the acceptance suite.
 */

struct CrossCheckResult {
    int64_t instances = 0;
    int64_t comparisons = 0;
    int64_t mismatches = 0;
};

// Runs `count` instances derived from `seed`: per instance, sizes are
// drawn as n in [1, 64], sigma and gamma in [2, 4], then for every color
// the two exact engines must match oracle_minimal and all three engines
// under the real filter must match oracle_real. Mismatches are described
// on `log` (one block per mismatch). With `sabotage` set, the skipping
// engine's reports are deliberately perturbed so the harness can prove
// the comparison actually bites.
CrossCheckResult run_corpus(int64_t count, uint64_t seed, bool sabotage,
                            std::ostream& log);

}  // namespace colorminer
