#include "colorminer/range_top2.hpp"

#include <algorithm>
#include <string>

namespace colorminer {

RangeTop2::RangeTop2(std::vector<int32_t> values) : values_(std::move(values)) {
    int32_t n = length();
    log2_.resize(n + 1, 0);
    for (int32_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;

    if (n == 0) return;
    int32_t levels = log2_[n] + 1;
    table_.resize(levels);
    table_[0].resize(n);
    for (int32_t i = 0; i < n; ++i) table_[0][i] = i;
    for (int32_t j = 1; j < levels; ++j) {
        int32_t span = 1 << j;
        table_[j].resize(n - span + 1);
        for (int32_t i = 0; i + span <= n; ++i) {
            int32_t a = table_[j - 1][i];
            int32_t b = table_[j - 1][i + span / 2];
            table_[j][i] = (values_[b] > values_[a]) ? b : a;
        }
    }
}

int32_t RangeTop2::arg_max(int32_t l, int32_t r) const {
    int32_t j = log2_[r - l + 1];
    int32_t a = table_[j][l];
    int32_t b = table_[j][r - (1 << j) + 1];
    return (values_[b] > values_[a]) ? b : a;
}

Top2 RangeTop2::top2(int32_t lo, int32_t hi) const {
    if (lo < 1 || hi > length() || lo > hi) {
        throw OutOfRange("top2 range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] invalid for length " +
                         std::to_string(length()));
    }
    int32_t l = lo - 1, r = hi - 1;
    int32_t p = arg_max(l, r);
    Top2 result;
    result.max = values_[p];
    if (l == r) return result;
    if (p > l && p < r) {
        result.second = std::max(values_[arg_max(l, p - 1)],
                                 values_[arg_max(p + 1, r)]);
    } else if (p == l) {
        result.second = values_[arg_max(p + 1, r)];
    } else {
        result.second = values_[arg_max(l, p - 1)];
    }
    return result;
}

}  // namespace colorminer
