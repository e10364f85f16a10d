#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorminer/colored_string.hpp"
#include "colorminer/suffix_tree.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace colorminer;

TEST_SUITE_BEGIN("suffix_tree");

namespace {

// node spelled by a string of the reversed text, which must end exactly at
// a node boundary
int32_t node_of(const SuffixTree& st, const std::vector<int32_t>& rev) {
    const auto loc = st.locate(rev);
    REQUIRE(loc.has_value());
    REQUIRE(loc->depth == st.string_depth(loc->node));
    return loc->node;
}

}  // namespace

/*
 * The tree for acacacbacab indexes the reversal bacabcacaca plus the
 * sentinel. Internal nodes are the repeated reversed substrings a, b, ca,
 * aca, caca; their sorted suffix blocks pin the suffix array below.
 */
TEST_CASE("worked example layout") {
    const ColoredString cs = testutil::canonical();
    const SuffixTree st = SuffixTree::build(cs);

    CHECK(st.n == 11);
    CHECK(st.rseq == std::vector<int32_t>{2, 1, 3, 1, 2, 3, 1, 3, 1, 3, 1, 0});
    CHECK(st.sa_ln ==
          std::vector<int32_t>{12, 11, 4, 9, 2, 7, 1, 5, 10, 3, 8, 6});
    CHECK(st.node_count() == 18);

    const int32_t a = node_of(st, {0});
    const int32_t b = node_of(st, {1});
    const int32_t ca = node_of(st, {2, 0});
    const int32_t aca = node_of(st, {0, 2, 0});
    const int32_t caca = node_of(st, {2, 0, 2, 0});

    SUBCASE("internal node shapes") {
        CHECK(st.string_depth(a) == 1);
        CHECK(st.string_depth(b) == 1);
        CHECK(st.string_depth(ca) == 2);
        CHECK(st.string_depth(aca) == 3);
        CHECK(st.string_depth(caca) == 4);
        CHECK(st.leaf_count(a) == 5);
        CHECK(st.leaf_count(b) == 2);
        CHECK(st.leaf_count(ca) == 4);
        CHECK(st.leaf_count(aca) == 3);
        CHECK(st.leaf_count(caca) == 2);
        for (int32_t u : {a, b, ca, aca, caca}) CHECK_FALSE(st.is_leaf(u));

        CHECK(st.parent(aca) == a);
        CHECK(st.parent(caca) == ca);
        CHECK(st.parent(a) == st.root());
        CHECK(st.tree_depth(st.root()) == 0);
        CHECK(st.tree_depth(a) == 1);
        CHECK(st.tree_depth(aca) == 2);
    }

    SUBCASE("breadth-first ranks, bottom of the tree first") {
        CHECK(st.ibfs(st.root()) == 17);
        CHECK(st.ibfs(a) == 15);
        CHECK(st.ibfs(b) == 14);
        CHECK(st.ibfs(ca) == 13);
        CHECK(st.ibfs(aca) == 10);
        CHECK(st.ibfs(caca) == 5);

        const std::map<int32_t, int32_t> leaf_rank = {
            {12, 16}, {11, 12}, {4, 11}, {1, 9}, {5, 8},  {10, 7},
            {3, 6},   {9, 4},   {2, 3},  {7, 2}, {8, 1},  {6, 0}};
        for (const auto& [ln, rank] : leaf_rank) {
            const int32_t leaf = st.leaf_for_ln(ln);
            CHECK(st.is_leaf(leaf));
            CHECK(st.leaf_ln(leaf) == ln);
            CHECK(st.ibfs(leaf) == rank);
            CHECK(st.node_of_ibfs(rank) == leaf);
        }
        CHECK(st.node_of_ibfs(10) == aca);
    }

    SUBCASE("children are stored sentinel-first") {
        CHECK(st.child_count(st.root()) == 4);
        CHECK(st.edge_first(*st.children_begin(st.root())) == 0);
        CHECK(st.child_with_symbol(st.root(), 3) == ca);
        CHECK(st.child_with_symbol(aca, 2) == st.leaf_for_ln(2));
        CHECK(st.child_with_symbol(aca, 1) == -1);
        CHECK(st.edge_first(ca) == 3);
    }

    SUBCASE("suffix links drop one front character") {
        CHECK(st.suffix_link(st.root()) == -1);
        CHECK(st.suffix_link(a) == st.root());
        CHECK(st.suffix_link(ca) == a);
        CHECK(st.suffix_link(aca) == ca);
        CHECK(st.suffix_link(caca) == aca);
        CHECK(st.suffix_link(st.leaf_for_ln(1)) == st.leaf_for_ln(2));
    }

    SUBCASE("loci one character in from the front") {
        Locus loc = st.slink_locus(aca, 3);
        CHECK(loc.node == ca);
        CHECK(loc.depth == 2);

        loc = st.slink_locus(aca, 2);
        CHECK(loc.node == ca);
        CHECK(loc.depth == 1);

        loc = st.slink_locus(caca, 4);
        CHECK(loc.node == aca);
        CHECK(loc.depth == 3);

        loc = st.slink_locus(caca, 3);
        CHECK(loc.node == aca);
        CHECK(loc.depth == 2);

        loc = st.slink_locus(a, 1);
        CHECK(loc.node == st.root());
        CHECK(loc.depth == 0);

        // depth must land strictly inside the incoming edge's span
        CHECK_THROWS_AS(st.slink_locus(aca, 1), InvalidLocus);
        CHECK_THROWS_AS(st.slink_locus(aca, 4), InvalidLocus);
        CHECK_THROWS_AS(st.slink_locus(st.root(), 1), InvalidLocus);
        CHECK_THROWS_AS(st.slink_locus(st.leaf_for_ln(12), 1), InvalidLocus);
    }

    SUBCASE("shortest new pattern per edge, forward orientation") {
        CHECK(st.left_min_label(a) == std::vector<int32_t>{0});
        CHECK(st.left_min_label(aca) == std::vector<int32_t>{2, 0});
        CHECK(st.left_min_label(caca) == std::vector<int32_t>{2, 0, 2});
        CHECK(st.left_min_label(st.leaf_for_ln(2)) ==
              std::vector<int32_t>{1, 0, 2, 0});

        // edges that begin with the sentinel introduce nothing
        CHECK_FALSE(st.left_min_label(st.leaf_for_ln(9)).has_value());
        CHECK_FALSE(st.has_left_min_label(st.leaf_for_ln(12)));
        CHECK(st.has_left_min_label(aca));
        CHECK_THROWS_AS(st.left_min_label(st.root()), RootHasNoLabel);
    }

    SUBCASE("leaf extremes and end positions") {
        CHECK(st.representative_ln(aca) == 9);
        CHECK(st.second_largest_leaf(aca) == 7);
        CHECK(st.second_largest_leaf(caca) == 6);
        CHECK(st.second_largest_leaf(st.root()) == 11);
        CHECK_FALSE(st.second_largest_leaf(st.leaf_for_ln(3)).has_value());
        CHECK(st.end_positions(aca) == std::vector<int32_t>{3, 5, 10});
        CHECK(st.end_positions(st.leaf_for_ln(4)) == std::vector<int32_t>{8});
    }

    SUBCASE("pattern walks") {
        CHECK_FALSE(st.locate({1, 1}).has_value());
        const auto empty = st.locate({});
        REQUIRE(empty.has_value());
        CHECK(empty->node == st.root());
        CHECK(empty->depth == 0);

        // a walk may stop in the middle of an edge
        const auto ab = st.locate({0, 1});
        REQUIRE(ab.has_value());
        CHECK(ab->node == st.leaf_for_ln(4));
        CHECK(ab->depth == 2);
    }

    SUBCASE("postorder visits children before parents") {
        const auto& order = st.postorder();
        REQUIRE(static_cast<int32_t>(order.size()) == st.node_count());
        std::vector<int32_t> seen_at(st.node_count(), -1);
        for (int32_t i = 0; i < st.node_count(); ++i) seen_at[order[i]] = i;
        for (int32_t u = 1; u < st.node_count(); ++u) {
            REQUIRE(seen_at[u] >= 0);
            CHECK(seen_at[u] < seen_at[st.parent(u)]);
        }
        CHECK(st.to_dot().find("digraph") != std::string::npos);
    }
}

TEST_CASE("random instances satisfy the structural contract") {
    SplitMix64 rng(314);
    for (int inst = 0; inst < 12; ++inst) {
        const int32_t n = 1 + static_cast<int32_t>(rng.next() % 48);
        const int32_t sigma = 1 + static_cast<int32_t>(rng.next() % 4);
        const ColoredString cs = gen_random(n, sigma, 2, rng.next());
        const SuffixTree st = SuffixTree::build(cs);
        const int32_t k = st.node_count();

        // the indexed sequence: reversed text plus sentinel
        std::vector<int32_t> rev(cs.text.rbegin(), cs.text.rend());
        REQUIRE(static_cast<int32_t>(st.rseq.size()) == n + 1);
        for (int32_t i = 0; i < n; ++i) REQUIRE(st.rseq[i] == rev[i] + 1);
        REQUIRE(st.rseq[n] == 0);

        std::vector<std::vector<int32_t>> suffixes;
        for (int32_t ln = 1; ln <= n + 1; ++ln)
            suffixes.emplace_back(st.rseq.begin() + ln - 1, st.rseq.end());
        REQUIRE(static_cast<int32_t>(st.sa_ln.size()) == n + 1);
        for (int32_t r = 1; r <= n; ++r)
            REQUIRE(suffixes[st.sa_ln[r - 1] - 1] <
                    suffixes[st.sa_ln[r] - 1]);

        // parent depths, leaf bookkeeping, branching
        int32_t leaves = 0;
        for (int32_t u = 0; u < k; ++u) {
            if (u != st.root()) {
                REQUIRE(st.parent(u) >= 0);
                REQUIRE(st.string_depth(st.parent(u)) < st.string_depth(u));
                REQUIRE(st.tree_depth(u) ==
                        st.tree_depth(st.parent(u)) + 1);
                REQUIRE(st.ibfs(u) < st.ibfs(st.parent(u)));
            }
            if (st.is_leaf(u)) {
                ++leaves;
                REQUIRE(st.leaf_count(u) == 1);
                REQUIRE(st.leaf_for_ln(st.leaf_ln(u)) == u);
                REQUIRE(st.string_depth(u) ==
                        n + 1 - st.leaf_ln(u) + 1);
            } else {
                REQUIRE(st.child_count(u) >= (u == st.root() ? 1 : 2));
            }
            REQUIRE(st.node_of_ibfs(st.ibfs(u)) == u);
        }
        REQUIRE(leaves == n + 1);

        // every node's string minus its first character is the link's string
        const auto spell = [&](int32_t u) {
            const int32_t start0 = st.representative_ln(u) - 1;
            return std::vector<int32_t>(
                st.rseq.begin() + start0,
                st.rseq.begin() + start0 + st.string_depth(u));
        };
        for (int32_t u = 1; u < k; ++u) {
            const auto s = spell(u);
            if (s[0] == 0) continue;  // sentinel-only leaf has no link
            const int32_t v = st.suffix_link(u);
            REQUIRE(v >= 0);
            REQUIRE(spell(v) ==
                    std::vector<int32_t>(s.begin() + 1, s.end()));
        }

        // locate agrees with a direct occurrence count for every substring
        for (int32_t i = 0; i < n; ++i) {
            std::vector<int32_t> pat;
            for (int32_t j = i; j < n; ++j) {
                pat.push_back(rev[j]);
                int64_t occ = 0;
                for (int32_t s = 0; s + static_cast<int32_t>(pat.size()) <=
                                    n; ++s) {
                    bool hit = true;
                    for (size_t t = 0; t < pat.size(); ++t)
                        if (rev[s + t] != pat[t]) hit = false;
                    if (hit) ++occ;
                }
                const auto loc = st.locate(pat);
                REQUIRE(loc.has_value());
                REQUIRE(st.leaf_count(loc->node) == occ);
            }
        }

        // top-two leaf numbers match a scan over the suffix-array block
        for (int32_t u = 0; u < k; ++u) {
            std::vector<int32_t> lns;
            for (int32_t r = st.sa_lo(u); r <= st.sa_hi(u); ++r)
                lns.push_back(st.sa_ln[r - 1]);
            std::sort(lns.rbegin(), lns.rend());
            if (st.is_leaf(u)) {
                REQUIRE_FALSE(st.second_largest_leaf(u).has_value());
            } else {
                REQUIRE(st.second_largest_leaf(u) == lns[1]);
            }
        }
    }
}

TEST_SUITE_END();
