#pragma once

// Certifying recognizers for the graph and bigraph classes the toolkit works
// with.  Every "no" comes with an Obstruction whose vertex list follows a
// fixed per-kind layout (see the comment at Obstruction); every "yes" comes
// with a checkable witness (elimination order, clique chain, split partition,
// side ordering, doubly lexical ordering, star center, bisplit partition).
// Exponential witness searches honour a step budget and a size cutoff; when
// either is exhausted the verdict stands and the obstruction is marked
// refused with an empty vertex list.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "orderings.hpp"

namespace hsq {

inline constexpr int witness_cutoff_default = 10;
inline constexpr long long witness_budget_default = 5'000'000;

// Closed set of obstruction kinds.  Witness layouts:
//   claw                 {center, leaf, leaf, leaf}
//   hole                 induced cycle in cycle order (>= 4, bipartite >= 6)
//   k_sun                t_0..t_{k-1} then s_0..s_{k-1}, s_i ~ t_i, t_{i+1}
//   diamond              {b, c, a, d} with a, d the nonadjacent pair
//   extra_big_component  one edge's endpoints from each of two components
//   no_universal_vertex  vertices whose neighbourhoods/nonneighbours conflict
//   non_split_quotient   2K2 {a,b,c,d} with edges ab, cd; or C4/C5 in order
//   not_interval         conflicting vertices; cols = clique indices
//   not_cop              conflicting row owners; cols = column ids
struct Obstruction {
    enum class Kind {
        claw,
        hole,
        k_sun,
        diamond,
        extra_big_component,
        no_universal_vertex,
        non_split_quotient,
        not_interval,
        not_cop,
    };
    Kind kind = Kind::hole;
    std::vector<int> vertices;
    std::vector<int> cols;   // second coordinate for matrix-shaped witnesses
    bool refused = false;    // verdict certain, witness search gave up
};

inline const char* to_string(Obstruction::Kind k) {
    switch (k) {
        case Obstruction::Kind::claw: return "claw";
        case Obstruction::Kind::hole: return "hole";
        case Obstruction::Kind::k_sun: return "k_sun";
        case Obstruction::Kind::diamond: return "diamond";
        case Obstruction::Kind::extra_big_component: return "extra_big_component";
        case Obstruction::Kind::no_universal_vertex: return "no_universal_vertex";
        case Obstruction::Kind::non_split_quotient: return "non_split_quotient";
        case Obstruction::Kind::not_interval: return "not_interval";
        case Obstruction::Kind::not_cop: return "not_cop";
    }
    return "?";
}

// Linear order on one side of a bigraph; perm[pos] = vertex id on that side.
struct SideOrdering {
    Side side = Side::X;
    std::vector<int> perm;
};

// ---------------------------------------------------------------------------
// chordality
// ---------------------------------------------------------------------------

struct Chordality {
    bool chordal = false;
    // peo[0] is eliminated first; the neighbours of v eliminated after v form
    // a clique.
    std::vector<int> peo;
    std::optional<Obstruction> obstruction;  // kind hole
};

namespace detail {

// Shortest u-w path avoiding v and N(v) \ {u, w}; prepending v yields an
// induced cycle of length >= 4 (a shortest path has no chords, and v sees
// only its endpoints).  Empty when u and w are separated.
inline std::vector<int> chordless_cycle_through(const Graph& g, int v, int u, int w) {
    const int n = g.n();
    std::vector<char> allowed(n, 1);
    allowed[v] = 0;
    for (int z : g.neighbors(v))
        if (z != u && z != w) allowed[z] = 0;
    std::vector<int> parent(n, -1);
    std::vector<int> queue{u};
    parent[u] = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        if (a == w) break;
        for (int z : g.neighbors(a))
            if (allowed[z] && parent[z] < 0) {
                parent[z] = a;
                queue.push_back(z);
            }
    }
    if (parent[w] < 0) return {};
    std::vector<int> path;
    for (int a = w; a != u; a = parent[a]) path.push_back(a);
    path.push_back(u);
    std::reverse(path.begin(), path.end());  // u .. w
    path.insert(path.begin(), v);
    return path;
}

inline bool induced_cycle_ok(const Graph& g, const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k < 4) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

} // namespace detail

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering exactly when the graph is chordal.
inline Chordality chordality(const Graph& g) {
    const int n = g.n();
    Chordality out;
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!visited[u]) ++weight[u];
    }
    out.peo.assign(visit.rbegin(), visit.rend());

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[out.peo[i]] = i;
    int bv = -1, bu = -1, bw = -1;
    bits::Row later = bits::make(n);
    for (int v = 0; v < n; ++v) bits::set(later, v);
    for (int i = 0; i < n && bv < 0; ++i) {
        int v = out.peo[i];
        bits::reset(later, v);
        bits::Row s = bits::and_(g.row(v), later);
        if (bits::count(s) < 2) continue;
        int u = -1;
        for (int z : bits::to_list(s))
            if (u < 0 || pos[z] < pos[u]) u = z;
        bits::Row missing = bits::minus(s, g.closed_row(u));
        if (bits::count(missing) > 0) {
            bv = v;
            bu = u;
            bw = bits::first(missing);
        }
    }
    if (bv < 0) {
        out.chordal = true;
        return out;
    }

    std::vector<int> hole = detail::chordless_cycle_through(g, bv, bu, bw);
    if (hole.empty()) {
        // The failing triple does not always span a hole, but some triple
        // around an existing hole does.
        for (int v = 0; v < n && hole.empty(); ++v) {
            const auto& nb = g.neighbors(v);
            for (std::size_t a = 0; a < nb.size() && hole.empty(); ++a)
                for (std::size_t b = a + 1; b < nb.size() && hole.empty(); ++b)
                    if (!g.adjacent(nb[a], nb[b]))
                        hole = detail::chordless_cycle_through(g, v, nb[a], nb[b]);
        }
    }
    require(detail::induced_cycle_ok(g, hole), E_INVARIANT,
            "chordality: failed to certify a non-chordal graph");
    out.obstruction = Obstruction{Obstruction::Kind::hole, hole, {}, false};
    return out;
}

// ---------------------------------------------------------------------------
// interval_model
// ---------------------------------------------------------------------------

// Maximal cliques arranged so that every vertex occupies a contiguous run;
// left/right are 1-based positions into cliques.
struct CliqueChain {
    CliqueSet cliques;
    std::vector<int> left, right;
};

struct IntervalResult {
    bool interval = false;
    CliqueChain chain;
    std::optional<Obstruction> obstruction;  // hole or not_interval
};

inline IntervalResult interval_model(const Graph& g) {
    IntervalResult out;
    Chordality ch = chordality(g);
    if (!ch.chordal) {
        out.obstruction = ch.obstruction;
        return out;
    }
    CliqueSet cs = maximal_cliques_peo(g, ch.peo);
    require(cs == maximal_cliques(g), E_INVARIANT,
            "interval_model: elimination-order cliques disagree with direct enumeration");
    const int q = static_cast<int>(cs.size());
    std::vector<std::vector<int>> rows(g.n());
    for (int j = 0; j < q; ++j)
        for (int v : cs[j]) rows[v].push_back(j);
    CopOutcome cop = consecutive_ones(rows, q);
    if (!cop.ok()) {
        // conflict_rows index the per-vertex rows, so they are vertex ids;
        // cols are clique indices in the canonical clique order.
        out.obstruction =
            Obstruction{Obstruction::Kind::not_interval, cop.conflict_rows, cop.conflict_cols, false};
        return out;
    }
    std::vector<int> order = *cop.order;
    // A chain read backwards is also a chain; fix the orientation whose
    // canonical clique indices come lexicographically first.
    {
        std::vector<int> rev(order.rbegin(), order.rend());
        if (rev < order) order = std::move(rev);
    }
    std::vector<int> pos(q);
    for (int p = 0; p < q; ++p) pos[order[p]] = p;
    out.chain.cliques.resize(q);
    for (int p = 0; p < q; ++p) out.chain.cliques[p] = cs[order[p]];
    out.chain.left.assign(g.n(), 0);
    out.chain.right.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        int lo = q + 1, hi = 0;
        for (int j : rows[v]) {
            lo = std::min(lo, pos[j] + 1);
            hi = std::max(hi, pos[j] + 1);
        }
        out.chain.left[v] = lo;
        out.chain.right[v] = hi;
        require(hi - lo + 1 == static_cast<int>(rows[v].size()), E_INVARIANT,
                "interval_model: vertex run is not contiguous");
    }
    out.interval = true;
    return out;
}

// ---------------------------------------------------------------------------
// is_unit_interval
// ---------------------------------------------------------------------------

struct UnitIntervalResult {
    bool unit_interval = false;
    CliqueChain chain;
    // All vertices sorted by (left, right, id); every clique of the chain is
    // a contiguous run of this order.
    std::vector<int> vertex_order;
    std::optional<Obstruction> obstruction;  // hole, not_interval or claw
};

inline UnitIntervalResult is_unit_interval(const Graph& g) {
    UnitIntervalResult out;
    IntervalResult iv = interval_model(g);
    if (!iv.interval) {
        out.obstruction = iv.obstruction;
        return out;
    }
    out.chain = std::move(iv.chain);
    const std::vector<int>&l = out.chain.left, &r = out.chain.right;
    // A claw centred at v forces a neighbour strictly between the earliest-
    // ending and latest-starting neighbour intervals.
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.size() < 3) continue;
        int a = -1, c = -1;
        for (int z : nb) {
            if (a < 0 || r[z] < r[a]) a = z;
            if (c < 0 || l[z] > l[c]) c = z;
        }
        for (int b : nb)
            if (l[b] > r[a] && r[b] < l[c]) {
                out.obstruction =
                    Obstruction{Obstruction::Kind::claw, {v, a, b, c}, {}, false};
                return out;
            }
    }
    out.vertex_order.resize(g.n());
    for (int v = 0; v < g.n(); ++v) out.vertex_order[v] = v;
    std::sort(out.vertex_order.begin(), out.vertex_order.end(), [&](int x, int y) {
        return std::tuple(l[x], r[x], x) < std::tuple(l[y], r[y], y);
    });
    // Claw-freeness forbids strictly nested vertex runs, so left and right
    // are both nondecreasing along vertex_order and cliques are contiguous.
    for (std::size_t i = 1; i < out.vertex_order.size(); ++i)
        require(r[out.vertex_order[i - 1]] <= r[out.vertex_order[i]], E_INVARIANT,
                "is_unit_interval: nested vertex runs in a claw-free interval graph");
    out.unit_interval = true;
    return out;
}

// ---------------------------------------------------------------------------
// is_strongly_chordal
// ---------------------------------------------------------------------------

struct StronglyChordalResult {
    bool strongly_chordal = false;
    // Doubly lexical ordering of the closed neighbourhood matrix; Gamma-free
    // exactly on yes, and the found Gamma positions otherwise.
    DoublyLexOrdering ordering;
    std::optional<Obstruction> obstruction;  // hole or k_sun
};

namespace detail {

// Depth-first search for an induced k-sun: clique t_0..t_{k-1} plus stable
// s_0..s_{k-1} with s_i adjacent to exactly t_i and t_{i+1 mod k}.  All
// pairwise constraints are enforced as vertices are placed, so a completed
// placement is exact.  t_0 is the minimum of the t-set.
inline bool find_sun(const Graph& g, int k, long long& steps, long long budget,
                     std::vector<int>& t, std::vector<int>& s) {
    const int n = g.n();
    t.assign(k, -1);
    s.assign(k, -1);
    std::vector<char> used(n, 0);

    // Places t[j] (need = 0) or s[j] (need = 1) for increasing j.
    std::function<bool(int, int)> place = [&](int j, int need) -> bool {
        if (need == 0 && j == k) return true;
        for (int v = (need == 0 && j > 0) ? t[0] + 1 : 0; v < n; ++v) {
            if (used[v]) continue;
            if (++steps > budget) return false;
            bool ok = true;
            if (need == 0) {
                for (int i = 0; i < j && ok; ++i) ok = g.adjacent(v, t[i]);
                for (int i = 0; i < j - 1 && ok; ++i) ok = !g.adjacent(v, s[i]);
                if (ok && j > 0) ok = g.adjacent(v, s[j - 1]);
            } else {
                ok = g.adjacent(v, t[j]);
                for (int i = 0; i < j && ok; ++i) ok = !g.adjacent(v, t[i]) || (j == k - 1 && i == 0);
                if (ok && j == k - 1) ok = g.adjacent(v, t[0]);
                for (int i = 0; i < j && ok; ++i) ok = !g.adjacent(v, s[i]);
            }
            if (!ok) continue;
            (need == 0 ? t : s)[j] = v;
            used[v] = 1;
            bool done = (need == 0) ? place(j, 1) : place(j + 1, 0);
            if (done) return true;
            used[v] = 0;
            if (steps > budget) return false;
        }
        return false;
    };
    return place(0, 0);
}

} // namespace detail

inline StronglyChordalResult is_strongly_chordal(const Graph& g,
                                                 int cutoff = witness_cutoff_default,
                                                 long long budget = witness_budget_default) {
    StronglyChordalResult out;
    out.ordering = doubly_lexical(closed_neighborhood_matrix(g));
    if (out.ordering.gamma_free) {
        out.strongly_chordal = true;
        return out;
    }
    Chordality ch = chordality(g);
    if (!ch.chordal) {
        out.obstruction = ch.obstruction;
        return out;
    }
    long long steps = 0;
    for (int k = 3; 2 * k <= cutoff && 2 * k <= g.n(); ++k) {
        std::vector<int> t, s;
        if (detail::find_sun(g, k, steps, budget, t, s)) {
            std::vector<int> w(t);
            w.insert(w.end(), s.begin(), s.end());
            out.obstruction = Obstruction{Obstruction::Kind::k_sun, std::move(w), {}, false};
            return out;
        }
        if (steps > budget) break;
    }
    out.obstruction = Obstruction{Obstruction::Kind::k_sun, {}, {}, true};
    return out;
}

// ---------------------------------------------------------------------------
// is_block_graph
// ---------------------------------------------------------------------------

struct BlockGraphResult {
    bool block_graph = false;
    std::vector<int> peo;
    std::optional<Obstruction> obstruction;  // hole or diamond
};

// Block graph: every biconnected component is a clique; equivalently chordal
// with no induced diamond.
inline BlockGraphResult is_block_graph(const Graph& g) {
    BlockGraphResult out;
    Chordality ch = chordality(g);
    if (!ch.chordal) {
        out.obstruction = ch.obstruction;
        return out;
    }
    out.peo = std::move(ch.peo);
    for (const auto& [u, v] : g.edges()) {
        bits::Row common = bits::and_(g.row(u), g.row(v));
        for (int a : bits::to_list(common)) {
            bits::Row missing = bits::minus(common, g.closed_row(a));
            if (bits::count(missing) > 0) {
                int d = bits::first(missing);
                out.obstruction =
                    Obstruction{Obstruction::Kind::diamond, {u, v, a, d}, {}, false};
                return out;
            }
        }
    }
    out.block_graph = true;
    return out;
}

// ---------------------------------------------------------------------------
// is_split
// ---------------------------------------------------------------------------

struct SplitPartition {
    std::vector<int> clique, stable;  // ascending vertex ids
};

struct SplitResult {
    bool split = false;
    SplitPartition partition;
    std::optional<Obstruction> obstruction;  // non_split_quotient (2K2/C4/C5)
};

namespace detail {

// Induced C5 by canonical path extension; returns empty when the budget runs
// out first.
inline std::vector<int> find_c5(const Graph& g, long long& steps, long long budget) {
    const int n = g.n();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<bool()> extend = [&]() -> bool {
        int back = path.back();
        for (int v = path[0] + 1; v < n; ++v) {
            if (used[v] || !g.adjacent(v, back)) continue;
            if (++steps > budget) return false;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
                chord = g.adjacent(v, path[i]) && !(i == 0 && path.size() == 4);
            if (chord) continue;
            if (path.size() == 4) {
                if (!g.adjacent(v, path[0])) continue;
                path.push_back(v);
                return true;
            }
            path.push_back(v);
            used[v] = 1;
            if (extend()) return true;
            path.pop_back();
            used[v] = 0;
            if (steps > budget) return false;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        path.assign(1, v);
        std::fill(used.begin(), used.end(), 0);
        used[v] = 1;
        if (extend()) return path;
        if (steps > budget) break;
    }
    return {};
}

} // namespace detail

// Degree-sequence split test; on yes the clique side is the m largest-degree
// vertices, on no an induced 2K2, C4 or C5 is produced (every non-split
// graph contains one).
inline SplitResult is_split(const Graph& g, long long budget = witness_budget_default) {
    SplitResult out;
    const int n = g.n();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tuple(-g.degree(a), a) < std::tuple(-g.degree(b), b);
    });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += g.degree(order[i]);
    for (int i = m; i < n; ++i) rhs += g.degree(order[i]);
    if (lhs == rhs) {
        out.partition.clique.assign(order.begin(), order.begin() + m);
        out.partition.stable.assign(order.begin() + m, order.end());
        std::sort(out.partition.clique.begin(), out.partition.clique.end());
        std::sort(out.partition.stable.begin(), out.partition.stable.end());
        for (std::size_t i = 0; i < out.partition.clique.size(); ++i)
            for (std::size_t j = i + 1; j < out.partition.clique.size(); ++j)
                require(g.adjacent(out.partition.clique[i], out.partition.clique[j]), E_INVARIANT,
                        "is_split: degree test accepted a non-clique side");
        for (std::size_t i = 0; i < out.partition.stable.size(); ++i)
            for (std::size_t j = i + 1; j < out.partition.stable.size(); ++j)
                require(!g.adjacent(out.partition.stable[i], out.partition.stable[j]), E_INVARIANT,
                        "is_split: degree test accepted a non-stable side");
        out.split = true;
        return out;
    }
    long long steps = 0;
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size() && steps <= budget; ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (++steps > budget) break;
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
                continue;
            out.obstruction =
                Obstruction{Obstruction::Kind::non_split_quotient, {a, b, c, d}, {}, false};
            return out;
        }
    for (int u = 0; u < n && steps <= budget; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            bits::Row common = bits::and_(g.row(u), g.row(v));
            for (int a : bits::to_list(common)) {
                if (++steps > budget) break;
                bits::Row missing = bits::minus(common, g.closed_row(a));
                if (bits::count(missing) > 0) {
                    int b = bits::first(missing);
                    out.obstruction =
                        Obstruction{Obstruction::Kind::non_split_quotient, {u, a, v, b}, {}, false};
                    return out;
                }
            }
        }
    if (steps <= budget) {
        std::vector<int> c5 = detail::find_c5(g, steps, budget);
        if (!c5.empty()) {
            out.obstruction =
                Obstruction{Obstruction::Kind::non_split_quotient, std::move(c5), {}, false};
            return out;
        }
    }
    out.obstruction = Obstruction{Obstruction::Kind::non_split_quotient, {}, {}, steps > budget};
    require(out.obstruction->refused, E_INVARIANT,
            "is_split: non-split graph with no 2K2, C4 or C5 found");
    return out;
}

// ---------------------------------------------------------------------------
// is_convex / is_biconvex
// ---------------------------------------------------------------------------

struct ConvexResult {
    bool convex = false;
    SideOrdering ordering;
    std::optional<Obstruction> obstruction;  // not_cop
};

struct BiconvexResult {
    bool biconvex = false;
    SideOrdering x_ordering, y_ordering;
    std::optional<Obstruction> obstruction;  // not_cop for the failing side
};

namespace detail {

// Orders `side` so every opposite neighbourhood is contiguous.  On failure
// the obstruction lists opposite-side vertices (rows) and side vertices
// (cols) of an irreducible conflict.
inline ConvexResult convex_on(const BipartiteGraph& b, Side side) {
    ConvexResult out;
    Side opp = (side == Side::X) ? Side::Y : Side::X;
    std::vector<std::vector<int>> rows(b.side_size(opp));
    for (int z = 0; z < b.side_size(opp); ++z) rows[z] = b.neighbors(opp, z);
    CopOutcome cop = consecutive_ones(rows, b.side_size(side));
    if (cop.ok()) {
        out.convex = true;
        out.ordering = SideOrdering{side, *cop.order};
    } else {
        out.obstruction =
            Obstruction{Obstruction::Kind::not_cop, cop.conflict_rows, cop.conflict_cols, false};
    }
    return out;
}

} // namespace detail

// Convex with respect to some side, X tried first.  The obstruction (both
// sides failing) is the X-side conflict.
inline ConvexResult is_convex(const BipartiteGraph& b) {
    ConvexResult x = detail::convex_on(b, Side::X);
    if (x.convex) return x;
    ConvexResult y = detail::convex_on(b, Side::Y);
    if (y.convex) return y;
    return x;
}

inline BiconvexResult is_biconvex(const BipartiteGraph& b) {
    BiconvexResult out;
    ConvexResult x = detail::convex_on(b, Side::X);
    if (!x.convex) {
        out.obstruction = x.obstruction;
        return out;
    }
    ConvexResult y = detail::convex_on(b, Side::Y);
    if (!y.convex) {
        out.obstruction = y.obstruction;
        return out;
    }
    out.biconvex = true;
    out.x_ordering = std::move(x.ordering);
    out.y_ordering = std::move(y.ordering);
    return out;
}

// ---------------------------------------------------------------------------
// is_chordal_bipartite
// ---------------------------------------------------------------------------

struct ChordalBipartiteResult {
    bool chordal_bipartite = false;
    // Doubly lexical ordering of the biadjacency matrix; Gamma-free exactly
    // on yes.
    DoublyLexOrdering ordering;
    std::optional<Obstruction> obstruction;  // hole (flattened ids, length >= 6)
};

namespace detail {

// Induced cycle of length >= 6 and <= cutoff by canonical path extension:
// path[0] is the cycle minimum, and any extension adjacent to path[0] must
// close immediately.
inline std::vector<int> find_long_hole(const Graph& g, int cutoff, long long& steps,
                                       long long budget) {
    const int n = g.n();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<std::optional<std::vector<int>>()> extend =
        [&]() -> std::optional<std::vector<int>> {
        int back = path.back();
        for (int v = path[0] + 1; v < n; ++v) {
            if (used[v] || !g.adjacent(v, back)) continue;
            if (++steps > budget) return std::nullopt;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                chord = g.adjacent(v, path[i]);
            if (chord) continue;
            // path[1] is adjacent to path[0] by construction; any later
            // vertex seeing path[0] must close the cycle now.
            if (path.size() >= 2 && g.adjacent(v, path[0])) {
                if (path.size() + 1 >= 6) {
                    std::vector<int> cycle = path;
                    cycle.push_back(v);
                    return cycle;
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 >= cutoff) continue;
            path.push_back(v);
            used[v] = 1;
            auto found = extend();
            if (found) return found;
            path.pop_back();
            used[v] = 0;
            if (steps > budget) return std::nullopt;
        }
        return std::nullopt;
    };
    for (int v = 0; v < n; ++v) {
        path.assign(1, v);
        std::fill(used.begin(), used.end(), 0);
        used[v] = 1;
        auto found = extend();
        if (found) return *found;
        if (steps > budget) break;
    }
    return {};
}

} // namespace detail

inline ChordalBipartiteResult is_chordal_bipartite(const BipartiteGraph& b,
                                                   int cutoff = witness_cutoff_default,
                                                   long long budget = witness_budget_default) {
    ChordalBipartiteResult out;
    out.ordering = doubly_lexical(biadjacency_matrix(b));
    if (out.ordering.gamma_free) {
        out.chordal_bipartite = true;
        return out;
    }
    long long steps = 0;
    // In a bigraph every cycle is even, so any induced cycle >= 6 will do;
    // ids are flattened (x, then y offset by nx).
    std::vector<int> hole = detail::find_long_hole(flatten(b), std::max(cutoff, 6), steps, budget);
    if (!hole.empty())
        out.obstruction = Obstruction{Obstruction::Kind::hole, std::move(hole), {}, false};
    else
        out.obstruction = Obstruction{Obstruction::Kind::hole, {}, {}, true};
    return out;
}

// ---------------------------------------------------------------------------
// is_star_convex
// ---------------------------------------------------------------------------

struct StarConvexResult {
    bool star_convex = false;
    int center = -1;  // vertex id on `side`, -1 only when that side is empty
    std::optional<Obstruction> obstruction;  // no_universal_vertex
};

// Star convex with the star on `side`: some center lies in every opposite
// neighbourhood of size >= 2.  On failure the witness is an inclusion-wise
// greedy list of opposite vertices whose neighbourhoods already intersect to
// nothing.
inline StarConvexResult is_star_convex(const BipartiteGraph& b, Side side) {
    StarConvexResult out;
    Side opp = (side == Side::X) ? Side::Y : Side::X;
    bits::Row candidates = bits::make(b.side_size(side));
    for (int v = 0; v < b.side_size(side); ++v) bits::set(candidates, v);
    bool constrained = false;
    for (int z = 0; z < b.side_size(opp); ++z) {
        if (b.degree(opp, z) < 2) continue;
        constrained = true;
        candidates = bits::and_(candidates, b.row(opp, z));
    }
    if (!constrained) {
        out.star_convex = true;
        out.center = b.side_size(side) > 0 ? 0 : -1;
        return out;
    }
    if (bits::count(candidates) > 0) {
        out.star_convex = true;
        out.center = bits::first(candidates);
        return out;
    }
    std::vector<int> picked;
    bits::Row running = bits::make(b.side_size(side));
    for (int v = 0; v < b.side_size(side); ++v) bits::set(running, v);
    for (int z = 0; z < b.side_size(opp) && bits::count(running) > 0; ++z) {
        if (b.degree(opp, z) < 2) continue;
        bits::Row next = bits::and_(running, b.row(opp, z));
        if (next != running) {
            picked.push_back(z);
            running = std::move(next);
        }
    }
    out.obstruction =
        Obstruction{Obstruction::Kind::no_universal_vertex, std::move(picked), {}, false};
    return out;
}

// ---------------------------------------------------------------------------
// is_balanced_bisplit
// ---------------------------------------------------------------------------

struct BisplitPartition {
    std::vector<int> x1, x2, y1, y2;                // ascending ids per side
    std::vector<std::pair<int, int>> matching;      // (x, y) pairs, x ascending
};

struct BalancedBisplitResult {
    bool balanced_bisplit = false;
    BisplitPartition partition;
};

// Balanced bisplit: |X| = |Y|, X = X1 u X2 with every X1 vertex adjacent to
// all of Y, and Y has Y2 with the X2-Y2 edges exactly a perfect matching.
// Taking X1 = all Y-universal vertices is optimal: shrinking X2 preserves
// private neighbours, so a valid partition survives enlarging X1.
inline BalancedBisplitResult is_balanced_bisplit(const BipartiteGraph& b) {
    BalancedBisplitResult out;
    if (b.nx() != b.ny()) return out;
    const int nx = b.nx(), ny = b.ny();
    bits::Row x2mask = bits::make(nx);
    for (int x = 0; x < nx; ++x) {
        if (bits::count(b.row(Side::X, x)) == ny)
            out.partition.x1.push_back(x);
        else {
            out.partition.x2.push_back(x);
            bits::set(x2mask, x);
        }
    }
    std::vector<char> in_y2(ny, 0);
    for (int x : out.partition.x2) {
        int match = -1;
        for (int y : b.neighbors(Side::X, x)) {
            bits::Row priv = bits::and_(b.row(Side::Y, y), x2mask);
            if (bits::count(priv) == 1 && bits::first(priv) == x) {
                match = y;
                break;
            }
        }
        if (match < 0) {
            out.partition = {};
            return out;
        }
        out.partition.matching.emplace_back(x, match);
        in_y2[match] = 1;
        out.partition.y2.push_back(match);
    }
    for (int y = 0; y < ny; ++y)
        if (!in_y2[y]) out.partition.y1.push_back(y);
    std::sort(out.partition.y2.begin(), out.partition.y2.end());
    out.balanced_bisplit = true;
    return out;
}

} // namespace hsq
