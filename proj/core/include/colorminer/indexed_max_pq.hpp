#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colorminer/errors.hpp"

namespace colorminer {

/*
 * Maximum-oriented indexed priority queue over a fixed index universe
 * [0, capacity). Ordering is (key, index) lexicographic, so equal keys
 * resolve toward the larger index. Keys only ever move down (demote);
 * max() is a peek, nothing is ever removed. all_negative() answers in
 * O(1) whether every inserted key is below zero, which is the engine's
 * termination test.
 */
class IndexedMaxPQ {
public:
    explicit IndexedMaxPQ(int32_t capacity);

    int32_t capacity() const { return static_cast<int32_t>(keys_.size()); }
    int32_t size() const { return static_cast<int32_t>(heap_.size()); }

    // Throws DuplicateInsert if index was inserted before, OutOfRange for
    // an index outside the universe.
    void insert(int32_t index, int32_t key);

    // Lower index's key to new_key. Equal key is a no-op; a larger key
    // throws DemoteIncrease.
    void demote(int32_t index, int32_t new_key);

    // Largest (key, index) pair without removing it.
    std::pair<int32_t, int32_t> max() const;  // (index, key)

    int32_t key_of(int32_t index) const;
    bool contains(int32_t index) const;
    bool all_negative() const { return nonnegative_ == 0; }

private:
    void sift_up(int32_t slot);
    void sift_down(int32_t slot);
    bool less(int32_t slot_a, int32_t slot_b) const;
    void check_index(int32_t index) const;

    std::vector<int32_t> keys_;
    std::vector<int32_t> slot_of_;  // -1 when not inserted
    std::vector<int32_t> heap_;     // heap of indices, max at slot 0
    int64_t nonnegative_ = 0;
};

}  // namespace colorminer
