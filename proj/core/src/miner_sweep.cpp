#include "colorminer/miner_sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "colorminer/errors.hpp"
#include "colorminer/miner_skip.hpp"

namespace colorminer {

namespace {

void check_input(const ColoredString& cs, int32_t y) {
    if (cs.size() == 0) throw EmptyInput("mining an empty string");
    if (y < 0 || y >= cs.gamma)
        throw ColorOutOfRange("color id " + std::to_string(y) +
                              " outside [0, " + std::to_string(cs.gamma) +
                              ")");
}

/*
 * One bottom-up pass for delay d: g[u] = 1 iff every suffix end below u
 * sees color y at position end+d, counting positions past the string end
 * as hits. A leaf with reversed start ln covers the forward prefix
 * ending at e = n-ln+1, so its checked position is n-(ln-d)+1.
 */
void mark_round(const SuffixTree& st, const ColoredString& cs, int32_t y,
                int32_t d, std::vector<char>& g, SweepStats* stats) {
    const int32_t n = st.n;
    int64_t visits = 0;
    for (int32_t u : st.postorder()) {
        ++visits;
        if (st.is_leaf(u)) {
            const int32_t ln = st.leaf_ln(u);
            if (ln <= d) {
                g[u] = 1;
            } else {
                const int32_t p = ln - d;
                g[u] = (p <= n && cs.color_at(n - p + 1) == y) ? 1 : 0;
            }
        } else {
            char all = 1;
            for (const int32_t* c = st.children_begin(u);
                 c != st.children_end(u); ++c) {
                ++visits;
                if (!g[*c]) {
                    all = 0;
                    break;
                }
            }
            g[u] = all;
        }
    }
    if (visits > 2 * static_cast<int64_t>(st.node_count()))
        throw std::logic_error("flag pass visited more than 2k nodes");
    if (stats) {
        ++stats->rounds;
        stats->node_visits += visits;
        stats->max_visits_per_round =
            std::max(stats->max_visits_per_round, visits);
    }
}

// forward pattern of length t at node u: reversal of the first t symbols
// of any suffix below u, shifted back to symbol ids
std::vector<int32_t> forward_pattern(const SuffixTree& st, int32_t u,
                                     int32_t t) {
    const int32_t start0 = st.representative_ln(u) - 1;
    std::vector<int32_t> pat(t);
    for (int32_t k = 0; k < t; ++k)
        pat[k] = st.rseq[start0 + t - 1 - k] - 1;
    return pat;
}

}  // namespace

std::vector<ReportEntry> sweep_all_unique(const ColoredString& cs, int32_t y,
                                          int32_t d_max, SweepStats* stats) {
    check_input(cs, y);
    const int32_t n = cs.size();
    if (d_max < 0) d_max = n;
    if (d_max > n)
        throw OutOfRange("d_max " + std::to_string(d_max) + " exceeds n = " +
                         std::to_string(n));

    const SuffixTree st = SuffixTree::build(cs);
    if (stats) stats->node_count = st.node_count();
    std::vector<char> g(st.node_count(), 0);
    std::vector<ReportEntry> out;

    for (int32_t d = 0; d <= d_max; ++d) {
        mark_round(st, cs, y, d, g, stats);
        for (int32_t u = 1; u < st.node_count(); ++u) {
            if (!g[u]) continue;
            const int32_t lo = st.string_depth(st.parent(u)) + 1;
            const int32_t hi =
                st.is_leaf(u) ? st.string_depth(u) - 1 : st.string_depth(u);
            for (int32_t t = lo; t <= hi; ++t) {
                out.push_back(ReportEntry{d, forward_pattern(st, u, t),
                                          st.leaf_count(u), {}});
            }
        }
    }

    sort_reports(cs, out, /*delay_ascending=*/true);
    return out;
}

std::vector<ReportEntry> sweep_minimal(const ColoredString& cs, int32_t y,
                                       const MineOptions& opts,
                                       SweepStats* stats) {
    check_input(cs, y);
    const int32_t n = cs.size();
    const SuffixTree st = SuffixTree::build(cs);
    const int32_t k = st.node_count();
    if (stats) stats->node_count = k;

    // g_prev holds round d+1; at d = n it is all-false, which is safe
    // because that round's only candidates hang off the root and skip
    // the trim consult anyway
    std::vector<char> g_cur(k, 0);
    std::vector<char> g_prev(k, 0);
    std::vector<ReportEntry> out;
    const int64_t report_cap = static_cast<int64_t>(n) * (n + 1);

    for (int32_t d = n; d >= 0; --d) {
        mark_round(st, cs, y, d, g_cur, stats);
        for (int32_t u = 1; u < k; ++u) {
            if (!g_cur[u] || g_cur[st.parent(u)]) continue;
            if (!st.has_left_min_label(u)) continue;
            const int32_t t = st.string_depth(st.parent(u)) + 1;
            if (t > 1) {
                // dropping the last pattern symbol must not stay uniform
                // at delay d+1; its locus is one suffix link away
                const Locus loc = st.slink_locus(u, t);
                if (g_prev[loc.node]) continue;
            }
            if (opts.real_filter && !passes_real_filter(st, u, d)) continue;
            if (opts.max_delay >= 0 && d > opts.max_delay) continue;
            out.push_back(ReportEntry{
                d, *st.left_min_label(u), st.leaf_count(u),
                opts.collect_end_positions ? st.end_positions(u)
                                           : std::vector<int32_t>{}});
            if (static_cast<int64_t>(out.size()) > report_cap)
                throw std::logic_error("minimal report exceeds n(n+1)");
        }
        std::swap(g_cur, g_prev);
    }

    sort_reports(cs, out, /*delay_ascending=*/false);
    return out;
}

}  // namespace colorminer
