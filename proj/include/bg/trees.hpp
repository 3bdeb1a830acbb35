#ifndef BG_TREES_HPP
#define BG_TREES_HPP

#include "bg/bigraph.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bg {

inline int vertex_count(const Bigraph& g) { return g.n1 + g.n2; }

inline bool is_connected(const Bigraph& g) {
    int n = vertex_count(g);
    if (n == 0)
        return true;
    // vertices 0..n1-1 are side 1, n1..n1+n2-1 side 2
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x < g.n1) {
            const Bits& r = g.rows[x];
            for (auto v = r.find_first(); v != Bits::npos; v = r.find_next(v)) {
                int y = g.n1 + static_cast<int>(v);
                if (!seen[y]) { seen[y] = 1; ++reached; q.push(y); }
            }
        } else {
            const Bits& c = g.cols[x - g.n1];
            for (auto u = c.find_first(); u != Bits::npos; u = c.find_next(u)) {
                int y = static_cast<int>(u);
                if (!seen[y]) { seen[y] = 1; ++reached; q.push(y); }
            }
        }
    }
    return reached == n;
}

inline int component_count(const Bigraph& g) {
    int n = vertex_count(g);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < g.n1; ++u)
        for (auto v = g.rows[u].find_first(); v != Bits::npos; v = g.rows[u].find_next(v))
            parent[find(u)] = find(g.n1 + static_cast<int>(v));
    int comps = 0;
    for (int x = 0; x < n; ++x)
        if (find(x) == x)
            ++comps;
    return comps;
}

inline bool is_forest(const Bigraph& g) {
    return g.edge_count() == vertex_count(g) - component_count(g);
}

inline bool is_tree(const Bigraph& g) {
    return vertex_count(g) >= 1 && g.edge_count() == vertex_count(g) - 1 && is_connected(g);
}

/// A tree bigraph with a distinguished root, which may lie on either side.
struct RootedTreeBigraph {
    Bigraph tree;
    VertexRef root{Side::one, 0};
};

inline RootedTreeBigraph transpose(const RootedTreeBigraph& t) {
    return {transpose(t.tree), {other(t.root.side), t.root.index}};
}

/// An ordered tree bigraph: the index order on each side IS the linear order,
/// so two ordered trees are isomorphic exactly when their matrices are equal.
struct OrderedTreeBigraph {
    Bigraph tree;

    explicit OrderedTreeBigraph(Bigraph t) : tree(std::move(t)) {
        if (!is_tree(tree))
            throw std::invalid_argument("not a tree bigraph");
    }

    friend bool operator==(const OrderedTreeBigraph&, const OrderedTreeBigraph&) = default;
};

/// T(a,b): root in V1 of degree a, internal vertices of degree a+1, every
/// root-to-leaf path of length exactly b. Levels have sizes 1, a, a^2, ...,
/// a^b and alternate sides. T(a,0) is a single side-1 vertex.
inline RootedTreeBigraph build_T(int a, int b) {
    if (a < 2)
        throw std::invalid_argument("build_T: a must be >= 2");
    if (b < 0)
        throw std::invalid_argument("build_T: b must be >= 0");
    // level sizes and per-side index layout in BFS order
    std::vector<long long> level_size(b + 1);
    level_size[0] = 1;
    for (int l = 1; l <= b; ++l) {
        level_size[l] = level_size[l - 1] * a;
        if (level_size[l] > 1'000'000)
            throw std::invalid_argument("build_T: tree too large");
    }
    std::vector<int> level_base(b + 1, 0);
    int n1 = 0, n2 = 0;
    for (int l = 0; l <= b; ++l) {
        if (l % 2 == 0) {
            level_base[l] = n1;
            n1 += static_cast<int>(level_size[l]);
        } else {
            level_base[l] = n2;
            n2 += static_cast<int>(level_size[l]);
        }
    }
    Bigraph g(n1, n2);
    for (int l = 0; l < b; ++l) {
        for (int i = 0; i < level_size[l]; ++i) {
            int parent = level_base[l] + i;
            for (int c = 0; c < a; ++c) {
                int child = level_base[l + 1] + i * a + c;
                if (l % 2 == 0)
                    g.set_edge(parent, child);
                else
                    g.set_edge(child, parent);
            }
        }
    }
    return {std::move(g), {Side::one, 0}};
}

inline RootedTreeBigraph build_T_tilde(int a, int b) { return transpose(build_T(a, b)); }

namespace detail {

// Disjoint union of rooted trees; returns per-part (offset1, offset2).
inline std::vector<std::pair<int, int>>
disjoint_union(Bigraph& acc, const std::vector<const Bigraph*>& parts) {
    int n1 = acc.n1, n2 = acc.n2;
    std::vector<std::pair<int, int>> offsets;
    for (const Bigraph* p : parts) {
        offsets.emplace_back(n1, n2);
        n1 += p->n1;
        n2 += p->n2;
    }
    Bigraph out(n1, n2);
    for (int u = 0; u < acc.n1; ++u)
        for (auto v = acc.rows[u].find_first(); v != Bits::npos; v = acc.rows[u].find_next(v))
            out.set_edge(u, static_cast<int>(v));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto [o1, o2] = offsets[i];
        const Bigraph& p = *parts[i];
        for (int u = 0; u < p.n1; ++u)
            for (auto v = p.rows[u].find_first(); v != Bits::npos; v = p.rows[u].find_next(v))
                out.set_edge(o1 + u, o2 + static_cast<int>(v));
    }
    acc = std::move(out);
    return offsets;
}

} // namespace detail

/// T(a1,b1,a2,b2) from the delta-regular family: a new side-1 root joined to
/// the roots of a1 disjoint copies of T~(delta,b1) and a2 copies of
/// T~(delta,b2).
inline RootedTreeBigraph build_T4(int a1, int b1, int a2, int b2, int delta) {
    if (delta < 2)
        throw std::invalid_argument("build_T4: delta must be >= 2");
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0)
        throw std::invalid_argument("build_T4: negative parameter");
    Bigraph g(1, 0); // the new root
    std::vector<RootedTreeBigraph> copies;
    for (int i = 0; i < a1; ++i)
        copies.push_back(build_T_tilde(delta, b1));
    for (int i = 0; i < a2; ++i)
        copies.push_back(build_T_tilde(delta, b2));
    std::vector<const Bigraph*> parts;
    for (const auto& c : copies)
        parts.push_back(&c.tree);
    auto offsets = detail::disjoint_union(g, parts);
    for (std::size_t i = 0; i < copies.size(); ++i) {
        // every T~ root is on side 2
        g.set_edge(0, offsets[i].second + copies[i].root.index);
    }
    return {std::move(g), {Side::one, 0}};
}

inline RootedTreeBigraph build_T4_tilde(int a1, int b1, int a2, int b2, int delta) {
    return transpose(build_T4(a1, b1, a2, b2, delta));
}

// ---- enumeration of ordered tree bigraphs ----

namespace detail {

// All k x l tree matrices by brute force over the 2^(k*l) matrices.
inline std::vector<Bigraph> trees_direct(int k, int l) {
    std::vector<Bigraph> out;
    int cells = k * l;
    int t = k + l;
    for (std::uint64_t code = 0; code < (1ULL << cells); ++code) {
        if (static_cast<int>(__builtin_popcountll(code)) != t - 1)
            continue;
        Bigraph g(k, l);
        for (int c = 0; c < cells; ++c)
            if (code >> c & 1)
                g.set_edge(c / l, c % l);
        if (is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

// All k x l tree matrices via Prufer sequences over the labels
// {0..k-1} (side 1) and {k..k+l-1} (side 2), keeping the bipartite ones.
inline std::vector<Bigraph> trees_prufer(int k, int l) {
    int t = k + l;
    std::vector<Bigraph> out;
    if (t == 1) {
        out.emplace_back(k, l);
        return out;
    }
    if (t == 2) {
        if (k == 1 && l == 1)
            out.push_back(make_bigraph(1, 1, {{0, 0}}));
        return out;
    }
    std::vector<int> seq(t - 2, 0);
    auto side1 = [&](int x) { return x < k; };
    while (true) {
        // decode
        std::vector<int> degree(t, 1);
        for (int s : seq)
            ++degree[s];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> used(t, 0);
        bool bipartite_ok = true;
        int ptr = 0;
        // standard decode: repeatedly join the smallest leaf to the next symbol
        std::vector<int> deg = degree;
        std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
        for (int x = 0; x < t; ++x)
            if (deg[x] == 1)
                leaves.push(x);
        for (int s : seq) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, s);
            if (side1(leaf) == side1(s))
                bipartite_ok = false;
            if (--deg[s] == 1)
                leaves.push(s);
        }
        int u = leaves.top();
        leaves.pop();
        int v = leaves.top();
        edges.emplace_back(u, v);
        if (side1(u) == side1(v))
            bipartite_ok = false;
        (void)used;
        (void)ptr;
        if (bipartite_ok) {
            Bigraph g(k, l);
            for (auto [x, y] : edges) {
                int a = side1(x) ? x : y;
                int b = side1(x) ? y : x;
                g.set_edge(a, b - k);
            }
            out.push_back(std::move(g));
        }
        // next sequence
        int pos = t - 3;
        while (pos >= 0 && seq[pos] == t - 1)
            seq[pos--] = 0;
        if (pos < 0)
            break;
        ++seq[pos];
    }
    return out;
}

} // namespace detail

inline constexpr int kMaxOrderedTreeBudget = 6;

/// All distinct ordered tree bigraphs with at most tau vertices, smaller
/// sizes first, matrices in generation order. Distinctness is matrix
/// equality with part sizes. tau <= 4 uses the direct matrix filter,
/// tau in {5,6} Prufer decoding; the unit tests cross-check the two.
inline const std::vector<Bigraph>& enumerate_ordered_trees(int tau) {
    if (tau < 1 || tau > kMaxOrderedTreeBudget)
        throw std::invalid_argument("enumerate_ordered_trees: tau outside [1,6]");
    static std::mutex mtx;
    static std::map<int, std::vector<Bigraph>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(tau);
    if (it != cache.end())
        return it->second;
    std::vector<Bigraph> all;
    for (int t = 1; t <= tau; ++t) {
        for (int k = 0; k <= t; ++k) {
            int l = t - k;
            if (t >= 2 && (k == 0 || l == 0))
                continue; // disconnected
            auto trees = (t <= 4) ? detail::trees_direct(k, l) : detail::trees_prufer(k, l);
            for (auto& g : trees)
                all.push_back(std::move(g));
        }
    }
    return cache.emplace(tau, std::move(all)).first->second;
}

// ---- rooted tree text format: bigraph lines plus "r <side> <index>" ----

inline void write_rooted_tree(std::ostream& os, const RootedTreeBigraph& t) {
    write_bigraph(os, t.tree);
    os << "r " << static_cast<int>(t.root.side) << " " << t.root.index << "\n";
}

inline RootedTreeBigraph read_rooted_tree(std::istream& is) {
    std::string text(std::istreambuf_iterator<char>(is), {});
    std::istringstream graph_pass(text);
    Bigraph g = read_bigraph(graph_pass);
    std::istringstream root_pass(text);
    std::string line;
    std::optional<VertexRef> root;
    while (std::getline(root_pass, line)) {
        if (line.empty() || line[0] != 'r')
            continue;
        std::istringstream ls(line);
        char tag;
        int side, index;
        if (!(ls >> tag >> side >> index) || (side != 1 && side != 2))
            throw std::invalid_argument("bad root line: " + line);
        root = VertexRef{side == 1 ? Side::one : Side::two, index};
    }
    if (!root)
        throw std::invalid_argument("missing root line");
    if (root->index < 0 || root->index >= g.side_size(root->side))
        throw std::out_of_range("root out of range");
    RootedTreeBigraph t{std::move(g), *root};
    if (!is_tree(t.tree))
        throw std::invalid_argument("rooted tree file does not contain a tree");
    return t;
}

} // namespace bg

#endif
