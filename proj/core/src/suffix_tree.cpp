#include "colorminer/suffix_tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace colorminer {

namespace {

// prefix-doubling suffix array, O(N log^2 N); plenty for the target sizes
std::vector<int32_t> build_suffix_array(const std::vector<int32_t>& s) {
    int32_t N = static_cast<int32_t>(s.size());
    std::vector<int32_t> sa(N), rank(N), next_rank(N);
    for (int32_t i = 0; i < N; ++i) {
        sa[i] = i;
        rank[i] = s[i];
    }
    for (int32_t k = 1;; k <<= 1) {
        auto cmp = [&](int32_t a, int32_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            int32_t ra = (a + k < N) ? rank[a + k] : -1;
            int32_t rb = (b + k < N) ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        next_rank[sa[0]] = 0;
        for (int32_t i = 1; i < N; ++i) {
            next_rank[sa[i]] = next_rank[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        }
        rank = next_rank;
        if (rank[sa[N - 1]] == N - 1) break;
    }
    return sa;
}

// Kasai: lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r]
std::vector<int32_t> build_lcp(const std::vector<int32_t>& s,
                               const std::vector<int32_t>& sa) {
    int32_t N = static_cast<int32_t>(s.size());
    std::vector<int32_t> row_of(N), lcp(N, 0);
    for (int32_t r = 0; r < N; ++r) row_of[sa[r]] = r;
    int32_t h = 0;
    for (int32_t i = 0; i < N; ++i) {
        if (row_of[i] == 0) {
            h = 0;
            continue;
        }
        int32_t j = sa[row_of[i] - 1];
        while (i + h < N && j + h < N && s[i + h] == s[j + h]) ++h;
        lcp[row_of[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

SuffixTree SuffixTree::build(const ColoredString& cs) {
    SuffixTree st;
    st.n = cs.size();
    int32_t N = st.n + 1;

    st.rseq.resize(N);
    for (int32_t i = 0; i < st.n; ++i) {
        st.rseq[i] = cs.text[st.n - 1 - i] + 1;  // shift so 0 is the sentinel
    }
    st.rseq[N - 1] = 0;

    auto sa = build_suffix_array(st.rseq);
    auto lcp = build_lcp(st.rseq, sa);
    st.sa_ln.resize(N);
    for (int32_t r = 0; r < N; ++r) st.sa_ln[r] = sa[r] + 1;

    // Left-to-right sweep over the suffix array, maintaining the chain of
    // nodes on the rightmost path. Each boundary LCP either attaches the
    // next leaf to an existing chain node or splits the last chain edge.
    std::vector<int32_t>& parent = st.parent_;
    std::vector<int32_t>& sd = st.sd_;
    std::vector<int32_t>& leaf_ln = st.leaf_ln_;
    std::vector<std::vector<int32_t>> kids;
    std::vector<int32_t> leaf_row;  // per node, SA row for leaves, -1 otherwise

    parent.push_back(-1);
    sd.push_back(0);
    leaf_ln.push_back(0);
    kids.emplace_back();
    leaf_row.push_back(-1);

    std::vector<int32_t> chain{0};
    for (int32_t r = 0; r < N; ++r) {
        int32_t split_depth = (r == 0) ? 0 : lcp[r];
        int32_t last = -1;
        while (sd[chain.back()] > split_depth) {
            last = chain.back();
            chain.pop_back();
        }
        int32_t attach = chain.back();
        if (sd[attach] < split_depth) {
            int32_t mid = static_cast<int32_t>(parent.size());
            parent.push_back(attach);
            sd.push_back(split_depth);
            leaf_ln.push_back(0);
            kids.emplace_back();
            leaf_row.push_back(-1);
            kids[attach].back() = mid;  // mid takes last's place
            parent[last] = mid;
            kids[mid].push_back(last);
            chain.push_back(mid);
            attach = mid;
        }
        int32_t leaf = static_cast<int32_t>(parent.size());
        parent.push_back(attach);
        sd.push_back(N - sa[r]);
        leaf_ln.push_back(sa[r] + 1);
        kids.emplace_back();
        leaf_row.push_back(r);
        kids[attach].push_back(leaf);
        chain.push_back(leaf);
    }

    int32_t k = static_cast<int32_t>(parent.size());

    // flatten children into CSR form
    st.child_start_.resize(k + 1, 0);
    for (int32_t u = 0; u < k; ++u) {
        st.child_start_[u + 1] =
            st.child_start_[u] + static_cast<int32_t>(kids[u].size());
    }
    st.child_list_.resize(st.child_start_[k]);
    for (int32_t u = 0; u < k; ++u) {
        std::copy(kids[u].begin(), kids[u].end(),
                  st.child_list_.begin() + st.child_start_[u]);
    }

    // postorder (children before parents), without recursion
    st.postorder_.reserve(k);
    {
        std::vector<std::pair<int32_t, int32_t>> stack{{0, 0}};
        while (!stack.empty()) {
            auto& [u, next_child] = stack.back();
            if (next_child < st.child_count(u)) {
                int32_t c = st.children_begin(u)[next_child++];
                stack.emplace_back(c, 0);
            } else {
                st.postorder_.push_back(u);
                stack.pop_back();
            }
        }
    }

    // suffix-array intervals, bottom-up
    st.sa_lo_.assign(k, 0);
    st.sa_hi_.assign(k, 0);
    for (int32_t u : st.postorder_) {
        if (st.is_leaf(u)) {
            st.sa_lo_[u] = st.sa_hi_[u] = leaf_row[u] + 1;
        } else {
            st.sa_lo_[u] = st.sa_lo_[st.children_begin(u)[0]];
            st.sa_hi_[u] = st.sa_hi_[st.children_end(u)[-1]];
        }
    }

    // first symbol of each incoming edge
    st.edge_first_.assign(k, -1);
    for (int32_t u = 1; u < k; ++u) {
        int32_t start0 = st.sa_ln[st.sa_lo_[u] - 1] - 1;
        st.edge_first_[u] = st.rseq[start0 + sd[parent[u]]];
    }

    // BFS ranks; ibfs(u) = k - rank so ancestors outrank descendants
    st.td_.assign(k, 0);
    st.ibfs_.assign(k, 0);
    st.node_of_ibfs_.assign(k, 0);
    {
        std::deque<int32_t> queue{0};
        int32_t rank = 0;
        while (!queue.empty()) {
            int32_t u = queue.front();
            queue.pop_front();
            ++rank;
            st.ibfs_[u] = k - rank;
            st.node_of_ibfs_[k - rank] = u;
            for (const int32_t* c = st.children_begin(u);
                 c != st.children_end(u); ++c) {
                st.td_[*c] = st.td_[u] + 1;
                queue.push_back(*c);
            }
        }
    }

    st.leaf_for_ln_.assign(N + 1, -1);
    for (int32_t u = 0; u < k; ++u) {
        if (st.is_leaf(u)) st.leaf_for_ln_[leaf_ln[u]] = u;
    }

    // Euler tour + sparse table for LCA, used once here to materialize
    // suffix links: slink(u) = lca(leaf(ln1+1), leaf(ln2+1)) over the
    // boundary leaves of u's interval.
    std::vector<int32_t> euler, first_occ(k, -1);
    euler.reserve(2 * k);
    {
        std::vector<std::pair<int32_t, int32_t>> stack{{0, 0}};
        first_occ[0] = 0;
        euler.push_back(0);
        while (!stack.empty()) {
            auto& [u, next_child] = stack.back();
            if (next_child < st.child_count(u)) {
                int32_t c = st.children_begin(u)[next_child++];
                first_occ[c] = static_cast<int32_t>(euler.size());
                euler.push_back(c);
                stack.emplace_back(c, 0);
            } else {
                stack.pop_back();
                if (!stack.empty()) euler.push_back(stack.back().first);
            }
        }
    }

    int32_t e = static_cast<int32_t>(euler.size());
    std::vector<int32_t> elog(e + 1, 0);
    for (int32_t i = 2; i <= e; ++i) elog[i] = elog[i / 2] + 1;
    int32_t levels = elog[e] + 1;
    std::vector<std::vector<int32_t>> table(levels);
    table[0] = euler;
    for (int32_t j = 1; j < levels; ++j) {
        int32_t span = 1 << j;
        table[j].resize(e - span + 1);
        for (int32_t i = 0; i + span <= e; ++i) {
            int32_t a = table[j - 1][i];
            int32_t b = table[j - 1][i + span / 2];
            table[j][i] = (st.td_[a] <= st.td_[b]) ? a : b;
        }
    }
    auto lca = [&](int32_t u, int32_t v) {
        int32_t a = first_occ[u], b = first_occ[v];
        if (a > b) std::swap(a, b);
        int32_t j = elog[b - a + 1];
        int32_t x = table[j][a];
        int32_t y = table[j][b - (1 << j) + 1];
        return (st.td_[x] <= st.td_[y]) ? x : y;
    };

    st.slink_.assign(k, -1);
    for (int32_t u = 1; u < k; ++u) {
        if (st.is_leaf(u)) {
            int32_t ln = leaf_ln[u];
            st.slink_[u] = (ln == N) ? 0 : st.leaf_for_ln_[ln + 1];
        } else {
            int32_t l1 = st.sa_ln[st.sa_lo_[u] - 1];
            int32_t l2 = st.sa_ln[st.sa_hi_[u] - 1];
            st.slink_[u] = lca(st.leaf_for_ln_[l1 + 1], st.leaf_for_ln_[l2 + 1]);
        }
        if (st.sd_[st.slink_[u]] != st.sd_[u] - 1) {
            throw std::logic_error("suffix link depth invariant violated");
        }
    }

    st.ln_top2_ = RangeTop2(st.sa_ln);
    return st;
}

const int32_t* SuffixTree::children_begin(int32_t u) const {
    return child_list_.data() + child_start_[u];
}

const int32_t* SuffixTree::children_end(int32_t u) const {
    return child_list_.data() + child_start_[u + 1];
}

int32_t SuffixTree::child_count(int32_t u) const {
    return child_start_[u + 1] - child_start_[u];
}

int32_t SuffixTree::child_with_symbol(int32_t u, int32_t c) const {
    const int32_t* lo = children_begin(u);
    const int32_t* hi = children_end(u);
    while (lo < hi) {
        const int32_t* mid = lo + (hi - lo) / 2;
        if (edge_first_[*mid] < c) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return (lo < children_end(u) && edge_first_[*lo] == c) ? *lo : -1;
}

std::optional<Locus> SuffixTree::locate(
    const std::vector<int32_t>& rev_pattern) const {
    int32_t u = 0, depth = 0;
    for (int32_t id : rev_pattern) {
        int32_t c = id + 1;
        if (depth == sd_[u]) {
            int32_t v = child_with_symbol(u, c);
            if (v == -1) return std::nullopt;
            u = v;
        } else {
            int32_t start0 = sa_ln[sa_lo_[u] - 1] - 1;
            if (rseq[start0 + depth] != c) return std::nullopt;
        }
        ++depth;
    }
    return Locus{u, depth};
}

Locus SuffixTree::slink_locus(int32_t u, int32_t t) const {
    if (u <= 0 || u >= node_count()) {
        throw InvalidLocus("locus node " + std::to_string(u) + " invalid");
    }
    int32_t v = parent_[u];
    if (t < 1 || t > sd_[u] || t <= sd_[v]) {
        throw InvalidLocus("locus depth " + std::to_string(t) +
                           " not in (" + std::to_string(sd_[v]) + ", " +
                           std::to_string(sd_[u]) + "]");
    }
    if (t == 1 && edge_first_[u] == 0) {
        throw InvalidLocus("sentinel-only locus has no suffix link");
    }
    if (t == 1) return Locus{0, 0};

    int32_t start0 = sa_ln[sa_lo_[u] - 1] - 1;  // suffix spelling L(u)
    int32_t w, cur;
    if (v == 0) {
        w = 0;
        cur = 0;
    } else {
        w = slink_[v];
        cur = sd_[v] - 1;
    }
    // descend toward depth t-1 along the string L(u) minus its first char
    while (cur < t - 1) {
        int32_t c = rseq[start0 + 1 + cur];
        int32_t next = child_with_symbol(w, c);
        if (next == -1) {
            throw std::logic_error("slink_locus descent left the tree");
        }
        w = next;
        cur = std::min(sd_[w], t - 1);
    }
    return Locus{w, t - 1};
}

bool SuffixTree::has_left_min_label(int32_t u) const {
    return u != 0 && edge_first_[u] != 0;
}

std::optional<std::vector<int32_t>> SuffixTree::left_min_label(int32_t u) const {
    if (u == 0) {
        throw RootHasNoLabel("the root has no incoming edge");
    }
    if (edge_first_[u] == 0) return std::nullopt;
    int32_t v = parent_[u];
    int32_t start0 = sa_ln[sa_lo_[u] - 1] - 1;
    std::vector<int32_t> label;
    label.reserve(sd_[v] + 1);
    label.push_back(edge_first_[u] - 1);
    for (int32_t j = sd_[v] - 1; j >= 0; --j) {
        label.push_back(rseq[start0 + j] - 1);
    }
    return label;
}

std::optional<int32_t> SuffixTree::second_largest_leaf(int32_t u) const {
    return ln_top2_.top2(sa_lo_[u], sa_hi_[u]).second;
}

std::vector<int32_t> SuffixTree::end_positions(int32_t u) const {
    std::vector<int32_t> ends;
    ends.reserve(sa_hi_[u] - sa_lo_[u] + 1);
    for (int32_t row = sa_lo_[u]; row <= sa_hi_[u]; ++row) {
        ends.push_back(n - sa_ln[row - 1] + 1);
    }
    std::sort(ends.begin(), ends.end());
    return ends;
}

std::string SuffixTree::to_dot() const {
    std::string out = "digraph suffix_tree {\n  node [shape=circle];\n";
    for (int32_t u = 0; u < node_count(); ++u) {
        out += "  n" + std::to_string(u) + " [label=\"sd=" +
               std::to_string(sd_[u]) + "\\nibfs=" + std::to_string(ibfs_[u]);
        if (is_leaf(u)) out += "\\nln=" + std::to_string(leaf_ln_[u]);
        out += "\"];\n";
    }
    for (int32_t u = 1; u < node_count(); ++u) {
        int32_t start0 = sa_ln[sa_lo_[u] - 1] - 1;
        std::string edge;
        for (int32_t d = sd_[parent_[u]]; d < sd_[u] && edge.size() < 8; ++d) {
            int32_t c = rseq[start0 + d];
            edge += (c == 0) ? '$' : static_cast<char>('a' + c - 1);
        }
        if (sd_[u] - sd_[parent_[u]] > 8) edge += "..";
        out += "  n" + std::to_string(parent_[u]) + " -> n" +
               std::to_string(u) + " [label=\"" + edge + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace colorminer
