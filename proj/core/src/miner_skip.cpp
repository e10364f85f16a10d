#include "colorminer/miner_skip.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "colorminer/errors.hpp"

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
 * Largest delay in [0, ell-1] whose checked position for this leaf's
 * suffix end lands on a set bit. The bitvector's always-set upper half
 * makes past-the-end delays hits, so one rank/select round-trip finds
 * the answer: the last set bit at or before end + ell - 1.
 */
int32_t leaf_bound(const SuffixTree& st, const ColorBitvector& bv,
                   int32_t leaf, int32_t ell) {
    const int64_t j = st.n - st.leaf_ln(leaf) + 1;  // 0 for the sentinel leaf
    const int64_t pos = j + ell - 1;
    if (pos < 1) return -1;
    const int64_t r = bv.rank1(pos);
    if (r == 0) return -1;
    const int64_t i = bv.select1(r) - j;
    return i < 0 ? -1 : static_cast<int32_t>(i);
}

constexpr int32_t kNoBound = std::numeric_limits<int32_t>::max();

// exact largest delay below ell uniform across the leaf children of u:
// start one below the bound and keep lowering to the worst child until a
// full pass leaves the candidate unchanged
int32_t all_leaf_exact(const SuffixTree& st, const ColorBitvector& bv,
                       IndexedMaxPQ& ipq, int32_t u, int32_t ell,
                       int64_t& evals) {
    int32_t candidate = ell - 1;
    while (candidate >= 0) {
        int32_t next = candidate;
        for (const int32_t* c = st.children_begin(u);
             c != st.children_end(u); ++c) {
            ++evals;
            const int32_t v = leaf_bound(st, bv, *c, candidate + 1);
            ipq.demote(st.ibfs(*c), v);
            next = std::min(next, v);
        }
        if (next == candidate) break;
        candidate = next;
    }
    return candidate < 0 ? -1 : candidate;
}

bool children_all_leaves(const SuffixTree& st, int32_t u) {
    for (const int32_t* c = st.children_begin(u); c != st.children_end(u);
         ++c)
        if (!st.is_leaf(*c)) return false;
    return true;
}

int32_t bound_impl(const SuffixTree& st, const ColorBitvector& bv,
                   IndexedMaxPQ& ipq, int32_t u, int32_t ell, bool fast,
                   SkipStats* stats) {
    int64_t evals = 0;
    int32_t result;
    if (st.is_leaf(u)) {
        ++evals;
        result = leaf_bound(st, bv, u, ell);
        ipq.demote(st.ibfs(u), result);
    } else if (fast && children_all_leaves(st, u)) {
        result = all_leaf_exact(st, bv, ipq, u, ell, evals);
        ++evals;
        ipq.demote(st.ibfs(u), result);
    } else {
        // explicit stack; the tree can be a path, so recursion is unsafe
        struct Frame {
            int32_t node;
            const int32_t* cur;
            int32_t best;
        };
        std::vector<Frame> stack;
        stack.push_back({u, st.children_begin(u), kNoBound});
        result = kNoBound;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.cur != st.children_end(f.node)) {
                const int32_t c = *f.cur++;
                if (st.is_leaf(c)) {
                    ++evals;
                    const int32_t v = leaf_bound(st, bv, c, ell);
                    ipq.demote(st.ibfs(c), v);
                    f.best = std::min(f.best, v);
                } else if (fast && children_all_leaves(st, c)) {
                    const int32_t v = all_leaf_exact(st, bv, ipq, c, ell,
                                                     evals);
                    ++evals;
                    ipq.demote(st.ibfs(c), v);
                    f.best = std::min(f.best, v);
                } else {
                    stack.push_back({c, st.children_begin(c), kNoBound});
                }
            } else {
                const int32_t v = f.best;
                ++evals;
                ipq.demote(st.ibfs(f.node), v);
                stack.pop_back();
                if (stack.empty())
                    result = v;
                else
                    stack.back().best = std::min(stack.back().best, v);
            }
        }
    }
    if (stats) stats->bound_evaluations += evals;
    return result;
}

}  // namespace

bool passes_real_filter(const SuffixTree& st, int32_t u, int32_t d) {
    if (st.is_leaf(u)) return false;
    const std::optional<int32_t> second = st.second_largest_leaf(u);
    // second-largest reversed start = second-smallest forward end e2;
    // ln >= d+1 is e2 + d <= n
    return second.has_value() && *second >= d + 1;
}

int32_t delay_bound(const SuffixTree& st, const ColorBitvector& bv,
                    IndexedMaxPQ& ipq, int32_t u, int32_t ell,
                    SkipStats* stats) {
    return bound_impl(st, bv, ipq, u, ell, /*fast=*/false, stats);
}

int32_t delay_bound_fast(const SuffixTree& st, const ColorBitvector& bv,
                         IndexedMaxPQ& ipq, int32_t u, int32_t ell,
                         SkipStats* stats) {
    return bound_impl(st, bv, ipq, u, ell, /*fast=*/true, stats);
}

std::vector<ReportEntry> skipping_mine(const ColoredString& cs, int32_t y,
                                       const MineOptions& opts,
                                       SkipStats* stats) {
    check_input(cs, y);
    if (opts.fast_bound && !opts.real_filter)
        throw std::invalid_argument(
            "fast_bound is only sound together with real_filter");

    const int32_t n = cs.size();
    const SuffixTree st = SuffixTree::build(cs);
    const ColorBitvector bv = build_color_bitvector(cs, y);
    const int32_t k = st.node_count();
    if (stats) stats->node_count = k;

    IndexedMaxPQ ipq(k);
    for (int32_t r = 0; r < k; ++r) ipq.insert(r, n + 1);

    // last delay at which each node was seen uniform, split by parity so
    // the d+1 consult below cannot be clobbered by the d-1 round
    std::vector<int32_t> recorded[2] = {std::vector<int32_t>(k, -1),
                                        std::vector<int32_t>(k, -1)};
    std::vector<int32_t> extraction_count(k, 0);
    std::vector<ReportEntry> out;
    const int64_t report_cap = static_cast<int64_t>(n) * (n + 1);

    while (!ipq.all_negative()) {
        const auto [r, d] = ipq.max();
        const int32_t u = st.node_of_ibfs(r);
        if (++extraction_count[u] > n + 2)
            throw std::logic_error("node extracted more than n+2 times");
        if (stats) ++stats->extractions;

        bool reported = false;
        if (d <= n && st.has_left_min_label(u)) {
            const int32_t t = st.string_depth(st.parent(u)) + 1;
            // the trimmed pattern is uniform at d+1 iff its locus node
            // was extracted at that key; the root locus (t = 1) never
            // records, which is what makes single symbols minimal
            const Locus loc = st.slink_locus(u, t);
            const bool right_min = recorded[(d + 1) % 2][loc.node] != d + 1;
            const bool real_ok =
                !opts.real_filter || passes_real_filter(st, u, d);
            const bool cap_ok = opts.max_delay < 0 || d <= opts.max_delay;
            if (right_min && real_ok && cap_ok) {
                if (ipq.key_of(st.ibfs(st.parent(u))) >= d)
                    throw std::logic_error(
                        "reporting node's parent still keyed at or above d");
                out.push_back(ReportEntry{
                    d, *st.left_min_label(u), st.leaf_count(u),
                    opts.collect_end_positions ? st.end_positions(u)
                                               : std::vector<int32_t>{}});
                reported = true;
                if (static_cast<int64_t>(out.size()) > report_cap)
                    throw std::logic_error("minimal report exceeds n(n+1)");
            }
            recorded[d % 2][u] = d;
        }

        const int32_t nk = opts.fast_bound
                               ? delay_bound_fast(st, bv, ipq, u, d, stats)
                               : delay_bound(st, bv, ipq, u, d, stats);
        if (opts.debug_trace)
            *opts.debug_trace << "(" << r << "," << d << ","
                              << (reported ? 1 : 0) << "," << nk << ")\n";

        // the re-key may undercut ancestors whose own bounds were stale;
        // repair upward so no ancestor surfaces above its true bound
        for (int32_t p = st.parent(u); p != -1; p = st.parent(p)) {
            if (ipq.key_of(st.ibfs(p)) <= nk) break;
            ipq.demote(st.ibfs(p), nk);
        }
    }

    if (stats) {
        stats->max_extractions_per_node =
            *std::max_element(extraction_count.begin(),
                              extraction_count.end());
    }
    sort_reports(cs, out, /*delay_ascending=*/false);
    return out;
}

}  // namespace colorminer
