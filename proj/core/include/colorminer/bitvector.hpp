#pragma once

#include <cstdint>
#include <vector>

#include "colorminer/colored_string.hpp"

namespace colorminer {

/*
 * Length-2n bitvector for one color y: bit i (1-based) is set when
 * position i carries color y, and every bit in the upper half (i > n) is
 * set unconditionally. A delay check that runs past the end of the string
 * then lands on a set bit, which folds the "beyond the end" case into the
 * same rank/select arithmetic as a real color hit.
 *
 * rank1 is inclusive of position i and O(1) via per-word prefix counts;
 * select1 is a binary search over those counts, O(log n).
 */
class ColorBitvector {
public:
    ColorBitvector() = default;

    // number of addressable bits (2n)
    int64_t size() const { return nbits_; }

    // ones among bits [1..i]; rank1(0) = 0. Throws OutOfRange unless
    // 0 <= i <= size().
    int64_t rank1(int64_t i) const;

    // position of the k-th set bit, 1 <= k <= rank1(size()).
    int64_t select1(int64_t k) const;

    bool get(int64_t i) const;

private:
    friend ColorBitvector build_color_bitvector(const ColoredString& cs,
                                                int32_t y);

    int64_t nbits_ = 0;
    std::vector<uint64_t> words_;
    std::vector<int64_t> prefix_;  // ones before each word
    int64_t total_ones_ = 0;
};

// Throws ColorOutOfRange unless 0 <= y < gamma.
ColorBitvector build_color_bitvector(const ColoredString& cs, int32_t y);

}  // namespace colorminer
