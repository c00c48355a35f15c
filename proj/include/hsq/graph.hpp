#pragma once

// Core data model: undirected graphs, bipartite graphs, clique sets, true-twin
// partitions, and the operations the recognizers are built from (half-square,
// subdivision, vertex-clique incidence, substitution).
//
// Vertices are 0-based ints.  Edge lists are kept canonical: u < v, sorted
// lexicographically, no duplicates, no loops.  All operations are pure.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hsq/error.hpp"

namespace hsq {

using Edge = std::pair<int, int>;

// Small fixed-width bitset rows; n is carried by the owner.
namespace bits {

using Row = std::vector<std::uint64_t>;

inline Row make(int n) { return Row((static_cast<std::size_t>(n) + 63) / 64, 0); }
inline void set(Row& r, int i) { r[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(Row& r, int i) { r[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool test(const Row& r, int i) { return (r[i >> 6] >> (i & 63)) & 1; }

inline bool intersects(const Row& a, const Row& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) return true;
    return false;
}

inline bool is_subset(const Row& a, const Row& b) {  // a subseteq b
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

inline int count(const Row& a) {
    int c = 0;
    for (auto w : a) c += __builtin_popcountll(w);
    return c;
}

// Smallest set bit, or -1.
inline int first(const Row& a) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w]) return static_cast<int>(w * 64 + __builtin_ctzll(a[w]));
    return -1;
}

// Largest set bit, or -1.
inline int last(const Row& a) {
    for (std::size_t w = a.size(); w-- > 0;)
        if (a[w]) return static_cast<int>(w * 64 + 63 - __builtin_clzll(a[w]));
    return -1;
}

inline Row and_(const Row& a, const Row& b) {
    Row r(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
    return r;
}

inline Row minus(const Row& a, const Row& b) {  // a \ b
    Row r(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & ~b[w];
    return r;
}

inline void or_into(Row& a, const Row& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

inline std::vector<int> to_list(const Row& a) {
    std::vector<int> out;
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t x = a[w];
        while (x) {
            out.push_back(static_cast<int>(w * 64 + __builtin_ctzll(x)));
            x &= x - 1;
        }
    }
    return out;
}

} // namespace bits

inline std::vector<Edge> canonical_edges(int n, std::vector<Edge> edges, const char* what) {
    for (auto& [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, E_INVARIANT,
                std::string(what) + ": vertex out of range");
        require(u != v, E_INVARIANT, std::string(what) + ": loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        require(n >= 0, E_INVARIANT, "graph: negative vertex count");
        edges_ = canonical_edges(n, std::move(edges), "graph");
        adj_.assign(n_, {});
        rows_.assign(n_, bits::make(n_));
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            bits::set(rows_[u], v);
            bits::set(rows_[v], u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return u != v && bits::test(rows_[u], v); }
    const bits::Row& row(int v) const { return rows_[v]; }

    // Closed neighborhood as a bit row.
    bits::Row closed_row(int v) const {
        bits::Row r = rows_[v];
        bits::set(r, v);
        return r;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // Optional display names, used by the DOT exporter only.
    std::vector<std::string> labels;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<bits::Row> rows_;
};

enum class Side { X, Y };

inline const char* side_name(Side s) { return s == Side::X ? "x" : "y"; }

// Bipartite graph with sides X (size nx) and Y (size ny); edges are X-Y pairs.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    BipartiteGraph(int nx, int ny, std::vector<Edge> edges) : nx_(nx), ny_(ny) {
        require(nx >= 0 && ny >= 0, E_INVARIANT, "bigraph: negative side size");
        for (auto [x, y] : edges) {
            require(x >= 0 && x < nx, E_INVARIANT, "bigraph: x vertex out of range");
            require(y >= 0 && y < ny, E_INVARIANT, "bigraph: y vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_x_.assign(nx_, {});
        adj_y_.assign(ny_, {});
        rows_x_.assign(nx_, bits::make(ny_));
        rows_y_.assign(ny_, bits::make(nx_));
        for (auto [x, y] : edges_) {
            adj_x_[x].push_back(y);
            adj_y_[y].push_back(x);
            bits::set(rows_x_[x], y);
            bits::set(rows_y_[y], x);
        }
        // edges_ sorted by (x, y) implies per-vertex lists are sorted.
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int side_size(Side s) const { return s == Side::X ? nx_ : ny_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors_of_x(int x) const { return adj_x_[x]; }
    const std::vector<int>& neighbors_of_y(int y) const { return adj_y_[y]; }
    const std::vector<int>& neighbors(Side s, int v) const {
        return s == Side::X ? adj_x_[v] : adj_y_[v];
    }
    int degree(Side s, int v) const { return static_cast<int>(neighbors(s, v).size()); }
    bool has_edge(int x, int y) const { return bits::test(rows_x_[x], y); }

    // Bit row over the opposite side.
    const bits::Row& row(Side s, int v) const { return s == Side::X ? rows_x_[v] : rows_y_[v]; }

    bool operator==(const BipartiteGraph& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && edges_ == o.edges_;
    }
    bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }

    std::vector<std::string> labels_x, labels_y;

private:
    int nx_ = 0, ny_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_x_, adj_y_;
    std::vector<bits::Row> rows_x_, rows_y_;
};

// A set of cliques, each sorted ascending; the set itself sorted
// lexicographically.  Not necessarily maximal unless stated.
using CliqueSet = std::vector<std::vector<int>>;

inline CliqueSet canonical_cliques(CliqueSet cs) {
    for (auto& q : cs) std::sort(q.begin(), q.end());
    std::sort(cs.begin(), cs.end());
    return cs;
}

// Partition of V(G) into maximal true-twin classes (equal closed
// neighborhoods).  Classes sorted by smallest member; members ascending.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;  // vertex -> class index
    std::vector<int> reps;      // class index -> smallest member
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Half-square on the chosen side: vertices of that side, two adjacent iff they
// share a neighbor on the other side.
inline Graph half_square(const BipartiteGraph& b, Side side) {
    const int n = b.side_size(side);
    const Side other = side == Side::X ? Side::Y : Side::X;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        bits::Row reach = bits::make(n);
        for (int w : b.neighbors(side, u)) bits::or_into(reach, b.row(other, w));
        bits::reset(reach, u);
        for (int v : bits::to_list(reach))
            if (v > u) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

// Subdivision of G: X = V(G), Y = E(G) in canonical edge order, incidences.
inline BipartiteGraph subdivision(const Graph& g) {
    std::vector<Edge> inc;
    const auto& es = g.edges();
    for (int j = 0; j < static_cast<int>(es.size()); ++j) {
        inc.emplace_back(es[j].first, j);
        inc.emplace_back(es[j].second, j);
    }
    return BipartiteGraph(g.n(), static_cast<int>(es.size()), std::move(inc));
}

namespace detail {

inline void bron_kerbosch(const Graph& g, bits::Row r, bits::Row p, bits::Row x, CliqueSet& out) {
    if (bits::count(p) == 0 && bits::count(x) == 0) {
        out.push_back(bits::to_list(r));
        return;
    }
    // Pivot: vertex of P u X maximizing |P cap N(u)|, ties to smaller id.
    int pivot = -1, best = -1;
    for (int u : bits::to_list(p)) {
        int c = bits::count(bits::and_(p, g.row(u)));
        if (c > best) { best = c; pivot = u; }
    }
    for (int u : bits::to_list(x)) {
        int c = bits::count(bits::and_(p, g.row(u)));
        if (c > best) { best = c; pivot = u; }
    }
    bits::Row cand = pivot < 0 ? p : bits::minus(p, g.row(pivot));
    for (int v : bits::to_list(cand)) {
        bits::Row r2 = r;
        bits::set(r2, v);
        bron_kerbosch(g, std::move(r2), bits::and_(p, g.row(v)), bits::and_(x, g.row(v)), out);
        bits::reset(p, v);
        bits::set(x, v);
    }
}

} // namespace detail

// All maximal cliques (Bron-Kerbosch with pivoting), canonical order.
// An isolated vertex is the maximal clique {v}; the empty graph has none
// unless n == 0, in which case the empty clique set is returned.
inline CliqueSet maximal_cliques(const Graph& g) {
    if (g.n() == 0) return {};
    CliqueSet out;
    bits::Row p = bits::make(g.n());
    for (int v = 0; v < g.n(); ++v) bits::set(p, v);
    detail::bron_kerbosch(g, bits::make(g.n()), std::move(p), bits::make(g.n()), out);
    return canonical_cliques(std::move(out));
}

// Maximal cliques of a chordal graph read off a perfect elimination ordering:
// candidates {v} u {later neighbors of v}, non-maximal ones discarded.
inline CliqueSet maximal_cliques_peo(const Graph& g, const std::vector<int>& peo) {
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    std::vector<bits::Row> cand;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        bits::Row c = bits::make(n);
        bits::set(c, v);
        for (int u : g.neighbors(v))
            if (pos[u] > i) bits::set(c, u);
        cand.push_back(std::move(c));
    }
    CliqueSet out;
    for (int i = 0; i < n; ++i) {
        bool dominated = false;
        for (int j = 0; j < n && !dominated; ++j)
            if (j != i && bits::is_subset(cand[i], cand[j]) && cand[i] != cand[j])
                dominated = true;
        // Equal candidate sets cannot occur: the earliest-eliminated member of
        // the candidate set determines it.
        if (!dominated) out.push_back(bits::to_list(cand[i]));
    }
    return canonical_cliques(std::move(out));
}

// Incidence bigraph for an explicit clique list: X = V(G), Y = cliques.
inline BipartiteGraph clique_incidence(const Graph& g, const CliqueSet& cs) {
    std::vector<Edge> inc;
    for (int j = 0; j < static_cast<int>(cs.size()); ++j)
        for (int v : cs[j]) inc.emplace_back(v, j);
    return BipartiteGraph(g.n(), static_cast<int>(cs.size()), std::move(inc));
}

// Vertex-clique incidence bigraph over all maximal cliques.  The half-square
// on X equals G again; this is checked unconditionally (it is cheap).
inline BipartiteGraph vertex_clique_incidence(const Graph& g) {
    BipartiteGraph b = clique_incidence(g, maximal_cliques(g));
    require(half_square(b, Side::X) == g, E_INVARIANT,
            "vertex_clique_incidence: half-square does not reproduce the input");
    return b;
}

inline TwinPartition true_twin_classes(const Graph& g) {
    const int n = g.n();
    TwinPartition tp;
    tp.class_of.assign(n, -1);
    std::vector<bits::Row> closed;
    closed.reserve(n);
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_row(v));
    for (int v = 0; v < n; ++v) {
        if (tp.class_of[v] >= 0) continue;
        int id = static_cast<int>(tp.classes.size());
        tp.classes.push_back({v});
        tp.class_of[v] = id;
        for (int u = v + 1; u < n; ++u)
            if (tp.class_of[u] < 0 && closed[u] == closed[v]) {
                tp.classes[id].push_back(u);
                tp.class_of[u] = id;
            }
    }
    for (const auto& c : tp.classes) tp.reps.push_back(c.front());
    return tp;
}

// Substitute each vertex v by a clique of sizes[v] vertices.  Blocks are laid
// out contiguously in vertex order.  Sizes must be >= 1.
inline Graph substitute(const Graph& g, const std::vector<int>& sizes) {
    require(static_cast<int>(sizes.size()) == g.n(), E_ASSUMPTION,
            "substitute: one size per vertex required");
    for (int s : sizes)
        require(s >= 1, E_ASSUMPTION, "substitute: sizes must be positive");
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + sizes[v];
    std::vector<Edge> edges;
    for (int v = 0; v < g.n(); ++v)
        for (int a = offset[v]; a < offset[v + 1]; ++a)
            for (int b = a + 1; b < offset[v + 1]; ++b) edges.emplace_back(a, b);
    for (auto [u, v] : g.edges())
        for (int a = offset[u]; a < offset[u + 1]; ++a)
            for (int b = offset[v]; b < offset[v + 1]; ++b) edges.emplace_back(a, b);
    return Graph(offset[g.n()], std::move(edges));
}

// Quotient by true twins: induced subgraph on class representatives,
// relabelled 0..k-1 in class order.
inline Graph quotient_graph(const Graph& g, const TwinPartition& tp) {
    const int k = static_cast<int>(tp.classes.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(tp.reps[i], tp.reps[j])) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
}

// Connected components, each sorted; components ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) out.push_back(v);
    return out;
}

// Induced subgraph on `verts` (must be sorted ascending, distinct), vertices
// relabelled 0..|verts|-1 in that order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
}

// Flatten a bipartite graph into an ordinary graph on nx + ny vertices
// (Y-vertex j becomes nx + j).  Used by cycle searches and tree checks.
inline Graph flatten(const BipartiteGraph& b) {
    std::vector<Edge> edges;
    for (auto [x, y] : b.edges()) edges.emplace_back(x, b.nx() + y);
    return Graph(b.nx() + b.ny(), std::move(edges));
}

// Delete a set of Y-vertices (sorted or not); remaining Y relabelled in order.
inline BipartiteGraph delete_y(const BipartiteGraph& b, const std::vector<int>& ys) {
    std::vector<char> gone(b.ny(), 0);
    for (int y : ys) {
        require(y >= 0 && y < b.ny(), E_INVARIANT, "delete_y: y out of range");
        gone[y] = 1;
    }
    std::vector<int> remap(b.ny(), -1);
    int k = 0;
    for (int y = 0; y < b.ny(); ++y)
        if (!gone[y]) remap[y] = k++;
    std::vector<Edge> edges;
    for (auto [x, y] : b.edges())
        if (!gone[y]) edges.emplace_back(x, remap[y]);
    return BipartiteGraph(b.nx(), k, std::move(edges));
}

} // namespace hsq
