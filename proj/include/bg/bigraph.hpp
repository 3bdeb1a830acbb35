#ifndef BG_BIGRAPH_HPP
#define BG_BIGRAPH_HPP

#include "bg/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bg {

using Bits = boost::dynamic_bitset<std::uint64_t>;

enum class Side : int { one = 1, two = 2 };

inline Side other(Side s) { return s == Side::one ? Side::two : Side::one; }

struct VertexRef {
    Side side;
    int index;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// A graph with a designated bipartition. Side 1 has n1 vertices, side 2 has
/// n2; the type cannot represent within-side edges. Rows and columns of the
/// adjacency matrix are kept as bitsets so neighbourhood operations run a
/// word at a time. Treat as immutable once built.
struct Bigraph {
    int n1 = 0, n2 = 0;
    std::vector<Bits> rows; // rows[u], u in V1: bitset over V2
    std::vector<Bits> cols; // cols[v], v in V2: bitset over V1

    Bigraph() = default;
    Bigraph(int n1_, int n2_)
        : n1(n1_), n2(n2_), rows(n1_, Bits(n2_)), cols(n2_, Bits(n1_)) {
        if (n1_ < 0 || n2_ < 0)
            throw std::invalid_argument("negative side size");
    }

    int side_size(Side s) const { return s == Side::one ? n1 : n2; }

    bool adjacent(int u, int v) const { return rows[u].test(v); }

    void set_edge(int u, int v, bool present = true) {
        rows[u].set(v, present);
        cols[v].set(u, present);
    }

    long long edge_count() const {
        long long e = 0;
        for (const auto& r : rows)
            e += static_cast<long long>(r.count());
        return e;
    }

    int deg1(int u) const { return static_cast<int>(rows[u].count()); }
    int deg2(int v) const { return static_cast<int>(cols[v].count()); }

    friend bool operator==(const Bigraph& a, const Bigraph& b) {
        return a.n1 == b.n1 && a.n2 == b.n2 && a.rows == b.rows;
    }
};

inline Bigraph make_bigraph(int n1, int n2,
                            const std::vector<std::pair<int, int>>& edges) {
    Bigraph g(n1, n2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n1 || v < 0 || v >= n2)
            throw std::out_of_range("edge endpoint out of range");
        g.set_edge(u, v);
    }
    return g;
}

/// A set of vertices on one side of a host bigraph.
struct VertexSet {
    Side side = Side::one;
    Bits members;

    VertexSet() = default;
    VertexSet(Side s, Bits m) : side(s), members(std::move(m)) {}
    VertexSet(Side s, int side_size, const std::vector<int>& idx)
        : side(s), members(side_size) {
        for (int i : idx) {
            if (i < 0 || i >= side_size)
                throw std::out_of_range("vertex index out of range");
            members.set(i);
        }
    }

    int count() const { return static_cast<int>(members.count()); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(members.count());
        for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
            out.push_back(static_cast<int>(i));
        return out;
    }
};

inline VertexSet full_side(const Bigraph& g, Side s) {
    Bits m(g.side_size(s));
    m.set();
    return {s, std::move(m)};
}

inline Bigraph transpose(const Bigraph& g) {
    Bigraph t(g.n2, g.n1);
    t.rows = g.cols;
    t.cols = g.rows;
    return t;
}

inline Bigraph bicomplement(const Bigraph& g) {
    Bigraph c(g.n1, g.n2);
    for (int u = 0; u < g.n1; ++u)
        c.rows[u] = ~g.rows[u];
    for (int v = 0; v < g.n2; ++v)
        c.cols[v] = ~g.cols[v];
    return c;
}

/// An induced sub-bigraph plus the maps from its indices back to the host,
/// so witnesses found inside can be reported in host coordinates.
struct Induced {
    Bigraph graph;
    std::vector<int> origin1, origin2;
};

inline Induced induced(const Bigraph& g, const VertexSet& x1, const VertexSet& x2) {
    if (x1.side != Side::one || x2.side != Side::two)
        throw std::invalid_argument("induced: sets on wrong sides");
    if (static_cast<int>(x1.members.size()) != g.n1 ||
        static_cast<int>(x2.members.size()) != g.n2)
        throw std::out_of_range("induced: set does not match host dimensions");
    Induced out;
    out.origin1 = x1.indices();
    out.origin2 = x2.indices();
    out.graph = Bigraph(static_cast<int>(out.origin1.size()),
                        static_cast<int>(out.origin2.size()));
    for (int a = 0; a < out.graph.n1; ++a)
        for (int b = 0; b < out.graph.n2; ++b)
            if (g.adjacent(out.origin1[a], out.origin2[b]))
                out.graph.set_edge(a, b);
    return out;
}

inline int covered_count(const Bigraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.side == y.side)
        throw std::invalid_argument("covered_count: sets on the same side");
    const auto& nbr = (y.side == Side::two) ? g.cols : g.rows;
    int covered = 0;
    for (auto i = y.members.find_first(); i != Bits::npos; i = y.members.find_next(i))
        if (nbr[i].intersects(x.members))
            ++covered;
    return covered;
}

/// X lambda-covers Y: at least lambda*|Y| vertices of Y have a neighbour in X.
inline bool lambda_covers(const Bigraph& g, const VertexSet& x, const VertexSet& y,
                          const Rational& lambda) {
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("lambda outside [0,1]");
    return Rational(covered_count(g, x, y)) >= lambda * y.count();
}

/// X lambda-misses Y: at least lambda*|Y| vertices of Y have no neighbour in X.
inline bool lambda_misses(const Bigraph& g, const VertexSet& x, const VertexSet& y,
                          const Rational& lambda) {
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("lambda outside [0,1]");
    return Rational(y.count() - covered_count(g, x, y)) >= lambda * y.count();
}

inline bool is_complete_pair(const Bigraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.side == b.side)
        throw std::invalid_argument("pair on the same side");
    const VertexSet& s1 = (a.side == Side::one) ? a : b;
    const VertexSet& s2 = (a.side == Side::one) ? b : a;
    for (auto u = s1.members.find_first(); u != Bits::npos; u = s1.members.find_next(u))
        if (!s2.members.is_subset_of(g.rows[u]))
            return false;
    return true;
}

inline bool is_anticomplete_pair(const Bigraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.side == b.side)
        throw std::invalid_argument("pair on the same side");
    const VertexSet& s1 = (a.side == Side::one) ? a : b;
    const VertexSet& s2 = (a.side == Side::one) ? b : a;
    for (auto u = s1.members.find_first(); u != Bits::npos; u = s1.members.find_next(u))
        if (g.rows[u].intersects(s2.members))
            return false;
    return true;
}

// ---- text format ----
//
//   c optional comments
//   p bigraph <n1> <n2>
//   e <i> <j>            (0-based, i in V1, j in V2)
//
// write_bigraph emits the canonical form: header then edges in row-major
// order, no comments. Round-trips are bit-exact.

inline void write_bigraph(std::ostream& os, const Bigraph& g) {
    os << "p bigraph " << g.n1 << " " << g.n2 << "\n";
    for (int u = 0; u < g.n1; ++u)
        for (auto v = g.rows[u].find_first(); v != Bits::npos; v = g.rows[u].find_next(v))
            os << "e " << u << " " << v << "\n";
}

inline std::string to_text(const Bigraph& g) {
    std::ostringstream os;
    write_bigraph(os, g);
    return os.str();
}

inline Bigraph read_bigraph(std::istream& is) {
    std::string line;
    std::optional<Bigraph> g;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            int n1, n2;
            if (!(ls >> kind >> n1 >> n2) || kind != "bigraph")
                throw std::invalid_argument("bad problem line: " + line);
            g.emplace(n1, n2);
        } else if (tag == 'e') {
            int u, v;
            if (!g || !(ls >> u >> v))
                throw std::invalid_argument("bad edge line: " + line);
            if (u < 0 || u >= g->n1 || v < 0 || v >= g->n2)
                throw std::out_of_range("edge out of range: " + line);
            g->set_edge(u, v);
        } else if (tag == 'r') {
            continue; // root line, consumed by the rooted-tree reader
        } else {
            throw std::invalid_argument("unknown line: " + line);
        }
    }
    if (!g)
        throw std::invalid_argument("missing problem line");
    return *g;
}

inline Bigraph from_text(const std::string& s) {
    std::istringstream is(s);
    return read_bigraph(is);
}

} // namespace bg

#endif
