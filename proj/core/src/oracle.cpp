#include "colorminer/oracle.hpp"

#include <bitset>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "colorminer/errors.hpp"

namespace colorminer {

namespace {

// delay masks are indexed 0..n, so this caps the text length the
// brute-force path accepts
constexpr int32_t kOracleLimit = 256;
using DelayMask = std::bitset<kOracleLimit + 1>;

struct Facts {
    int32_t n = 0;
    std::vector<std::vector<int32_t>> ends;  // per substring id, ascending
    std::vector<int32_t> first_start;        // one occurrence start per id
    std::vector<int32_t> length;
    std::vector<DelayMask> uniform;          // bit d: every end good at d
    std::vector<std::vector<int32_t>> id_at;  // [a][b] -> substring id
    DelayMask eps_uniform;  // bit d: colors d..n are all y (d >= 1)
};

void check_input(const ColoredString& cs, int32_t y) {
    if (cs.size() == 0) throw EmptyInput("mining an empty string");
    if (cs.size() > kOracleLimit)
        throw TooLarge("oracle accepts n <= " + std::to_string(kOracleLimit) +
                       ", got " + std::to_string(cs.size()));
    if (y < 0 || y >= cs.gamma)
        throw ColorOutOfRange("color id " + std::to_string(y) +
                              " outside [0, " + std::to_string(cs.gamma) +
                              ")");
}

// enumerate every distinct substring with its end set, then fold each
// end's good-delay mask into a per-substring uniformity mask
Facts gather(const ColoredString& cs, int32_t y) {
    Facts fx;
    const int32_t n = cs.size();
    fx.n = n;

    std::map<std::vector<int32_t>, int32_t> id_of;
    fx.id_at.assign(n + 1, std::vector<int32_t>(n + 1, -1));
    for (int32_t a = 1; a <= n; ++a) {
        std::vector<int32_t> slice;
        for (int32_t b = a; b <= n; ++b) {
            slice.push_back(cs.symbol_at(b));
            auto [it, fresh] =
                id_of.emplace(slice, static_cast<int32_t>(fx.ends.size()));
            if (fresh) {
                fx.ends.emplace_back();
                fx.first_start.push_back(a);
                fx.length.push_back(b - a + 1);
            }
            fx.ends[it->second].push_back(b);
            fx.id_at[a][b] = it->second;
        }
    }

    std::vector<DelayMask> good(n + 1);
    for (int32_t e = 1; e <= n; ++e)
        for (int32_t d = 0; d <= n; ++d)
            good[e][d] = e + d > n || cs.color_at(e + d) == y;

    fx.uniform.assign(fx.ends.size(), DelayMask{});
    for (size_t id = 0; id < fx.ends.size(); ++id) {
        DelayMask m;
        m.set();
        for (int32_t e : fx.ends[id]) m &= good[e];
        fx.uniform[id] = m;
    }

    for (int32_t d = n; d >= 1; --d) {
        const bool tail = d == n || fx.eps_uniform[d + 1];
        fx.eps_uniform[d] = tail && cs.color_at(d) == y;
    }
    return fx;
}

// uniformity of the substring [a..b] at a delay that may run past n;
// past n every end is beyond the string, so it counts as uniform
bool uniform_at(const Facts& fx, int32_t a, int32_t b, int32_t dd) {
    if (dd > fx.n) return true;
    return fx.uniform[fx.id_at[a][b]][dd];
}

// the definition, checked verbatim: no shorter substring may be uniform
// once its delay is shifted to keep the same checked position. The scan
// bails on the first blocker, which is usually the left trim (2, m).
bool is_minimal(const Facts& fx, int32_t id, int32_t d) {
    const int32_t m = fx.length[id];
    if (m == 1) return !fx.eps_uniform[d];
    const int32_t a = fx.first_start[id];
    for (int32_t j = m; j >= 1; --j) {
        const int32_t dd = d + m - j;
        for (int32_t i = (j == m) ? 2 : 1; i <= j; ++i)
            if (uniform_at(fx, a + i - 1, a + j - 1, dd)) return false;
    }
    return true;
}

std::vector<int32_t> pattern_of(const ColoredString& cs, int32_t a,
                                int32_t m) {
    std::vector<int32_t> pat(m);
    for (int32_t k = 0; k < m; ++k) pat[k] = cs.symbol_at(a + k);
    return pat;
}

std::vector<ReportEntry> minimal_scan(const ColoredString& cs, int32_t y,
                                      int32_t max_delay, bool real_only) {
    check_input(cs, y);
    const Facts fx = gather(cs, y);
    const int32_t n = fx.n;
    std::vector<ReportEntry> out;
    for (size_t id = 0; id < fx.ends.size(); ++id) {
        for (int32_t d = 0; d <= n; ++d) {
            if (max_delay >= 0 && d > max_delay) break;
            if (!fx.uniform[id][d]) continue;
            if (!is_minimal(fx, static_cast<int32_t>(id), d)) continue;
            if (real_only) {
                const auto& ends = fx.ends[id];
                if (ends.size() < 2 || ends[1] + d > n) continue;
            }
            out.push_back(ReportEntry{
                d, pattern_of(cs, fx.first_start[id], fx.length[id]),
                static_cast<int64_t>(fx.ends[id].size()), fx.ends[id]});
        }
    }
    sort_reports(cs, out, /*delay_ascending=*/false);
    return out;
}

}  // namespace

std::vector<ReportEntry> oracle_all_unique(const ColoredString& cs, int32_t y,
                                           int32_t d_max) {
    check_input(cs, y);
    const int32_t n = cs.size();
    if (d_max < 0) d_max = n;
    if (d_max > n)
        throw OutOfRange("d_max " + std::to_string(d_max) + " exceeds n = " +
                         std::to_string(n));
    const Facts fx = gather(cs, y);
    std::vector<ReportEntry> out;
    for (size_t id = 0; id < fx.ends.size(); ++id)
        for (int32_t d = 0; d <= d_max; ++d)
            if (fx.uniform[id][d])
                out.push_back(ReportEntry{
                    d, pattern_of(cs, fx.first_start[id], fx.length[id]),
                    static_cast<int64_t>(fx.ends[id].size()), fx.ends[id]});
    sort_reports(cs, out, /*delay_ascending=*/true);
    return out;
}

std::vector<ReportEntry> oracle_minimal(const ColoredString& cs, int32_t y,
                                        int32_t max_delay) {
    return minimal_scan(cs, y, max_delay, /*real_only=*/false);
}

std::vector<ReportEntry> oracle_real(const ColoredString& cs, int32_t y,
                                     int32_t max_delay) {
    return minimal_scan(cs, y, max_delay, /*real_only=*/true);
}

}  // namespace colorminer
