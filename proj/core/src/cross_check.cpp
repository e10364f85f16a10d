#include "colorminer/cross_check.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "colorminer/colored_string.hpp"
#include "colorminer/miner_skip.hpp"
#include "colorminer/miner_sweep.hpp"
#include "colorminer/oracle.hpp"

namespace colorminer {

namespace {

struct Instance {
    ColoredString cs;
    int32_t n, sigma, gamma;
    uint64_t inst_seed;
};

bool same_entry(const ReportEntry& a, const ReportEntry& b) {
    return a.delay == b.delay && a.pattern == b.pattern &&
           a.occurrence_count == b.occurrence_count;
}

// both sides arrive sorted the same way, so the first index where they
// disagree names the offending entry
void compare(const Instance& inst, int32_t y, const char* label,
             const std::vector<ReportEntry>& got,
             const std::vector<ReportEntry>& want, CrossCheckResult& res,
             std::ostream& log) {
    ++res.comparisons;
    size_t bad = 0;
    while (bad < got.size() && bad < want.size() &&
           same_entry(got[bad], want[bad]))
        ++bad;
    if (bad == got.size() && bad == want.size()) return;

    ++res.mismatches;
    log << "mismatch: engine=" << label << " n=" << inst.n
        << " sigma=" << inst.sigma << " gamma=" << inst.gamma << " seed=0x"
        << std::hex << inst.inst_seed << std::dec << " y=" << y << "\n";
    log << "  sizes: got " << got.size() << ", expected " << want.size()
        << "\n";
    const auto describe = [&](const char* side,
                              const std::vector<ReportEntry>& v) {
        if (bad < v.size())
            log << "  " << side << "[" << bad << "]: d=" << v[bad].delay
                << " pattern=" << render_pattern(inst.cs, v[bad].pattern)
                << " count=" << v[bad].occurrence_count << "\n";
    };
    describe("got", got);
    describe("expected", want);
}

}  // namespace

CrossCheckResult run_corpus(int64_t count, uint64_t seed, bool sabotage,
                            std::ostream& log) {
    SplitMix64 rng(seed);
    CrossCheckResult res;
    for (int64_t it = 0; it < count; ++it) {
        Instance inst;
        inst.n = 1 + static_cast<int32_t>(rng.next() % 64);
        inst.sigma = 2 + static_cast<int32_t>(rng.next() % 3);
        inst.gamma = 2 + static_cast<int32_t>(rng.next() % 3);
        inst.inst_seed = rng.next();
        inst.cs = gen_random(inst.n, inst.sigma, inst.gamma, inst.inst_seed);
        ++res.instances;

        for (int32_t y = 0; y < inst.gamma; ++y) {
            const auto want_full = oracle_minimal(inst.cs, y);
            auto base_full = sweep_minimal(inst.cs, y);
            auto skip_full = skipping_mine(inst.cs, y);
            if (sabotage) {
                if (skip_full.empty())
                    skip_full.push_back(ReportEntry{0, {0}, 1, {}});
                else
                    ++skip_full.front().delay;
            }
            compare(inst, y, "base", base_full, want_full, res, log);
            compare(inst, y, "skip", skip_full, want_full, res, log);

            const auto want_real = oracle_real(inst.cs, y);
            MineOptions real;
            real.real_filter = true;
            MineOptions fast = real;
            fast.fast_bound = true;
            compare(inst, y, "base+real", sweep_minimal(inst.cs, y, real),
                    want_real, res, log);
            compare(inst, y, "skip+real", skipping_mine(inst.cs, y, real),
                    want_real, res, log);
            compare(inst, y, "fast+real", skipping_mine(inst.cs, y, fast),
                    want_real, res, log);
        }
    }
    return res;
}

}  // namespace colorminer
