#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorminer/colored_string.hpp"
#include "colorminer/range_top2.hpp"

namespace colorminer {

// A point on a suffix-tree edge: the prefix of node's string with length
// depth, where string_depth(parent) < depth <= string_depth(node).
struct Locus {
    int32_t node = 0;
    int32_t depth = 0;
};

/*
 * Suffix tree of the REVERSED text plus a terminal sentinel. The sentinel
 * orders before every real symbol, which fixes child order, BFS ranks and
 * priority-queue tie-breaking once and for all. Node 0 is the root;
 * children are stored in CSR form in lexicographic edge order.
 *
 * Leaf numbers (ln) are the 1-based start of the leaf's suffix in the
 * reversed text; the suffix of length n+1-ln+1 corresponds to the prefix
 * of the forward text ending at position n-ln+1. The suffix array is kept
 * (values are ln) together with a range-top2 index over it, which answers
 * "largest / second largest leaf below a node" directly.
 *
 * Built from the suffix array: prefix-doubling sort, Kasai LCP, then a
 * single left-to-right sweep that maintains the rightmost path. Suffix
 * links come from constant-time LCA over the shifted boundary leaves.
 */
class SuffixTree {
public:
    static SuffixTree build(const ColoredString& cs);

    int32_t n = 0;                // forward text length
    std::vector<int32_t> rseq;    // reversed text, symbols shifted +1, 0 = sentinel
    std::vector<int32_t> sa_ln;   // suffix array over rseq, as 1-based ln values

    int32_t node_count() const { return static_cast<int32_t>(parent_.size()); }
    int32_t root() const { return 0; }

    int32_t parent(int32_t u) const { return parent_[u]; }
    int32_t string_depth(int32_t u) const { return sd_[u]; }
    int32_t tree_depth(int32_t u) const { return td_[u]; }
    bool is_leaf(int32_t u) const { return leaf_ln_[u] != 0; }
    int32_t leaf_ln(int32_t u) const { return leaf_ln_[u]; }      // 0 for internal
    int32_t suffix_link(int32_t u) const { return slink_[u]; }    // -1 for root
    int32_t ibfs(int32_t u) const { return ibfs_[u]; }
    int32_t node_of_ibfs(int32_t r) const { return node_of_ibfs_[r]; }
    int32_t sa_lo(int32_t u) const { return sa_lo_[u]; }  // 1-based rows into sa_ln
    int32_t sa_hi(int32_t u) const { return sa_hi_[u]; }
    int64_t leaf_count(int32_t u) const { return sa_hi_[u] - sa_lo_[u] + 1; }

    // children of u in stored (lexicographic, sentinel-first) order
    const int32_t* children_begin(int32_t u) const;
    const int32_t* children_end(int32_t u) const;
    int32_t child_count(int32_t u) const;

    // first symbol of the edge (parent(u) -> u), in shifted alphabet
    int32_t edge_first(int32_t u) const { return edge_first_[u]; }

    // child of u whose edge starts with shifted symbol c, or -1
    int32_t child_with_symbol(int32_t u, int32_t c) const;

    // first leaf below u in suffix-array order; its suffix spells L(u)
    // from the front
    int32_t representative_ln(int32_t u) const { return sa_ln[sa_lo_[u] - 1]; }

    // leaf node holding suffix ln
    int32_t leaf_for_ln(int32_t ln) const { return leaf_for_ln_[ln]; }

    const std::vector<int32_t>& postorder() const { return postorder_; }

    // Walk from the root along a pattern written in reversed-text
    // orientation (plain 0-based symbol ids, no sentinel). Returns the
    // locus, or nothing if the pattern does not occur in the reversed text.
    std::optional<Locus> locate(const std::vector<int32_t>& rev_pattern) const;

    // Locus of L(u)[1..t] minus its first character, resolved to the node
    // at or below the target point. Throws InvalidLocus for an invalid
    // (u, t) or for the sentinel-only string.
    Locus slink_locus(int32_t u, int32_t t) const;

    // Shortest pattern introduced on the edge into u, reversed into
    // forward-text orientation: first edge symbol, then parent's string
    // reversed. Empty optional when the edge starts with the sentinel;
    // throws RootHasNoLabel for the root.
    std::optional<std::vector<int32_t>> left_min_label(int32_t u) const;
    bool has_left_min_label(int32_t u) const;

    // Second largest ln below u via the range-top2 index; absent at leaves.
    std::optional<int32_t> second_largest_leaf(int32_t u) const;

    // 1-based forward-text end positions of the pattern at node u
    std::vector<int32_t> end_positions(int32_t u) const;

    // GraphViz dump annotated with sd, ln and ibfs, for debugging
    std::string to_dot() const;

private:
    std::vector<int32_t> parent_;
    std::vector<int32_t> sd_;
    std::vector<int32_t> td_;
    std::vector<int32_t> leaf_ln_;
    std::vector<int32_t> slink_;
    std::vector<int32_t> ibfs_;
    std::vector<int32_t> node_of_ibfs_;
    std::vector<int32_t> sa_lo_, sa_hi_;
    std::vector<int32_t> child_start_;  // CSR offsets into child_list_
    std::vector<int32_t> child_list_;
    std::vector<int32_t> edge_first_;
    std::vector<int32_t> leaf_for_ln_;
    std::vector<int32_t> postorder_;
    RangeTop2 ln_top2_;
};

}  // namespace colorminer
