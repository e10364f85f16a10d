#include "colorminer/indexed_max_pq.hpp"

#include <string>

namespace colorminer {

IndexedMaxPQ::IndexedMaxPQ(int32_t capacity) {
    if (capacity < 0) {
        throw OutOfRange("negative capacity " + std::to_string(capacity));
    }
    keys_.assign(capacity, 0);
    slot_of_.assign(capacity, -1);
    heap_.reserve(capacity);
}

void IndexedMaxPQ::check_index(int32_t index) const {
    if (index < 0 || index >= capacity()) {
        throw OutOfRange("index " + std::to_string(index) + " outside [0, " +
                         std::to_string(capacity()) + ")");
    }
}

bool IndexedMaxPQ::less(int32_t slot_a, int32_t slot_b) const {
    int32_t ia = heap_[slot_a], ib = heap_[slot_b];
    if (keys_[ia] != keys_[ib]) return keys_[ia] < keys_[ib];
    return ia < ib;
}

void IndexedMaxPQ::sift_up(int32_t slot) {
    while (slot > 0) {
        int32_t up = (slot - 1) / 2;
        if (!less(up, slot)) break;
        std::swap(heap_[up], heap_[slot]);
        slot_of_[heap_[up]] = up;
        slot_of_[heap_[slot]] = slot;
        slot = up;
    }
}

void IndexedMaxPQ::sift_down(int32_t slot) {
    int32_t count = size();
    for (;;) {
        int32_t left = 2 * slot + 1, right = left + 1, best = slot;
        if (left < count && less(best, left)) best = left;
        if (right < count && less(best, right)) best = right;
        if (best == slot) break;
        std::swap(heap_[best], heap_[slot]);
        slot_of_[heap_[best]] = best;
        slot_of_[heap_[slot]] = slot;
        slot = best;
    }
}

void IndexedMaxPQ::insert(int32_t index, int32_t key) {
    check_index(index);
    if (slot_of_[index] != -1) {
        throw DuplicateInsert("index " + std::to_string(index) +
                              " already inserted");
    }
    keys_[index] = key;
    heap_.push_back(index);
    slot_of_[index] = size() - 1;
    if (key >= 0) ++nonnegative_;
    sift_up(size() - 1);
}

void IndexedMaxPQ::demote(int32_t index, int32_t new_key) {
    check_index(index);
    if (slot_of_[index] == -1) {
        throw OutOfRange("index " + std::to_string(index) + " never inserted");
    }
    int32_t cur = keys_[index];
    if (new_key > cur) {
        throw DemoteIncrease("demote of index " + std::to_string(index) +
                             " from " + std::to_string(cur) + " to " +
                             std::to_string(new_key));
    }
    if (new_key == cur) return;
    if (cur >= 0 && new_key < 0) --nonnegative_;
    keys_[index] = new_key;
    sift_down(slot_of_[index]);
}

std::pair<int32_t, int32_t> IndexedMaxPQ::max() const {
    if (heap_.empty()) throw OutOfRange("max() on empty queue");
    int32_t index = heap_[0];
    return {index, keys_[index]};
}

int32_t IndexedMaxPQ::key_of(int32_t index) const {
    check_index(index);
    if (slot_of_[index] == -1) {
        throw OutOfRange("index " + std::to_string(index) + " never inserted");
    }
    return keys_[index];
}

bool IndexedMaxPQ::contains(int32_t index) const {
    check_index(index);
    return slot_of_[index] != -1;
}

}  // namespace colorminer
