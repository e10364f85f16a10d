#include "colorminer/bitvector.hpp"

#include <bit>
#include <string>

namespace colorminer {

ColorBitvector build_color_bitvector(const ColoredString& cs, int32_t y) {
    if (y < 0 || y >= cs.gamma) {
        throw ColorOutOfRange("color id " + std::to_string(y) +
                              " outside [0, " + std::to_string(cs.gamma) + ")");
    }
    int64_t n = cs.size();
    ColorBitvector bv;
    bv.nbits_ = 2 * n;
    bv.words_.assign(static_cast<size_t>((bv.nbits_ + 63) / 64), 0);
    auto set_bit = [&bv](int64_t i) {  // i is 1-based
        bv.words_[static_cast<size_t>((i - 1) >> 6)] |=
            uint64_t{1} << ((i - 1) & 63);
    };
    for (int64_t i = 1; i <= n; ++i) {
        if (cs.colors[static_cast<size_t>(i - 1)] == y) set_bit(i);
    }
    for (int64_t i = n + 1; i <= 2 * n; ++i) set_bit(i);

    bv.prefix_.resize(bv.words_.size() + 1);
    bv.prefix_[0] = 0;
    for (size_t w = 0; w < bv.words_.size(); ++w) {
        bv.prefix_[w + 1] = bv.prefix_[w] + std::popcount(bv.words_[w]);
    }
    bv.total_ones_ = bv.prefix_.back();
    return bv;
}

bool ColorBitvector::get(int64_t i) const {
    if (i < 1 || i > nbits_) {
        throw OutOfRange("bit index " + std::to_string(i) + " outside [1, " +
                         std::to_string(nbits_) + "]");
    }
    return (words_[static_cast<size_t>((i - 1) >> 6)] >> ((i - 1) & 63)) & 1;
}

int64_t ColorBitvector::rank1(int64_t i) const {
    if (i < 0 || i > nbits_) {
        throw OutOfRange("rank1 position " + std::to_string(i) +
                         " outside [0, " + std::to_string(nbits_) + "]");
    }
    if (i == 0) return 0;
    size_t w = static_cast<size_t>((i - 1) >> 6);
    int shift = static_cast<int>((i - 1) & 63);
    uint64_t mask = (shift == 63) ? ~uint64_t{0}
                                  : ((uint64_t{1} << (shift + 1)) - 1);
    return prefix_[w] + std::popcount(words_[w] & mask);
}

int64_t ColorBitvector::select1(int64_t k) const {
    if (k < 1 || k > total_ones_) {
        throw OutOfRange("select1 rank " + std::to_string(k) +
                         " outside [1, " + std::to_string(total_ones_) + "]");
    }
    // last word whose prefix count is < k
    size_t lo = 0, hi = words_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (prefix_[mid + 1] >= k) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    uint64_t word = words_[lo];
    int64_t need = k - prefix_[lo];
    for (int b = 0; b < 64; ++b) {
        if ((word >> b) & 1) {
            if (--need == 0) return static_cast<int64_t>(lo) * 64 + b + 1;
        }
    }
    throw OutOfRange("select1: inconsistent prefix counts");  // unreachable
}

}  // namespace colorminer
