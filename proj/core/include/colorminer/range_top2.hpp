#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colorminer/errors.hpp"

namespace colorminer {

struct Top2 {
    int32_t max = 0;
    std::optional<int32_t> second;  // absent for single-element ranges
};

/*
 * Immutable index over an integer array answering "largest and second
 * largest value in [lo,hi]" (1-based, inclusive) in O(1). Built as a
 * sparse table over argmax; the second value comes from two more probes
 * split around the argmax position, so duplicates of the maximum at
 * other positions are reported as the second value.
 */
class RangeTop2 {
public:
    RangeTop2() = default;
    explicit RangeTop2(std::vector<int32_t> values);

    int32_t length() const { return static_cast<int32_t>(values_.size()); }

    // Throws OutOfRange unless 1 <= lo <= hi <= length().
    Top2 top2(int32_t lo, int32_t hi) const;

private:
    // argmax over 0-based inclusive [l, r], leftmost on ties
    int32_t arg_max(int32_t l, int32_t r) const;

    std::vector<int32_t> values_;
    std::vector<std::vector<int32_t>> table_;  // table_[j][i]: argmax of [i, i+2^j)
    std::vector<int32_t> log2_;
};

}  // namespace colorminer
