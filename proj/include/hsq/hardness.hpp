#pragma once

// Edge clique cover machinery and its equivalence with balanced bisplit
// half-roots.  A graph G with k extra universal vertices has a balanced
// bisplit half-root exactly when the edges of G can be covered by k cliques,
// so an exact ECC solver, the universal-vertex reduction, and converters
// between covers and roots form one toolchain:
//
//   solve_ecc                exact branch and bound cover search
//   reduce_ecc               append k universal vertices to a clean instance
//   build_root_from_cover    k-cover of G  ->  bisplit root of the gadget
//   extract_cover_from_root  bisplit root of the gadget  ->  <= k cover of G

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsq/error.hpp"
#include "hsq/graph.hpp"
#include "hsq/halfsquare.hpp"
#include "hsq/recognition.hpp"

namespace hsq {

// An edge clique cover question: can the edges of g be covered by at most
// k cliques?  k >= 1 always.
struct EccInstance {
    Graph g;
    int k = 1;
};

// A list of cliques (sorted vertex lists, list sorted lexicographically)
// covering every edge of the graph it was built for.
struct CliqueCover {
    std::vector<std::vector<int>> cliques;
};

// g_prime is g plus |u_set| fresh universal vertices; u_set lists exactly
// the universal vertices of g_prime, so deleting them recovers g.
struct ReductionOutput {
    Graph g_prime;
    std::vector<int> u_set;
};

// A bipartite root together with the partition witnessing the balanced
// bisplit property: |X| = |Y|, X1 complete to Y, and the X2-Y2 edges form a
// perfect matching between the two.
struct BalancedBisplitRoot {
    BipartiteGraph b;
    std::vector<int> x1, x2, y1, y2;
    std::vector<std::pair<int, int>> matching;  // (x, y), x ascending
};

namespace detail {

// Empty result means: every clique is a set of pairwise adjacent vertices of
// g and every edge of g lies inside some clique.
inline std::optional<std::string> cover_defect(const Graph& g,
                                               const CliqueCover& cover) {
    for (const auto& q : cover.cliques) {
        std::vector<char> seen(g.n(), 0);
        for (int v : q) {
            if (v < 0 || v >= g.n()) return "clique vertex out of range";
            if (seen[v]) return "clique repeats a vertex";
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
                if (!g.adjacent(q[i], q[j]))
                    return "clique contains a non-edge";
    }
    std::vector<std::vector<char>> member;
    for (const auto& q : cover.cliques) {
        std::vector<char> m(g.n(), 0);
        for (int v : q) m[v] = 1;
        member.push_back(std::move(m));
    }
    for (auto [a, b] : g.edges()) {
        bool hit = false;
        for (const auto& m : member)
            if (m[a] && m[b]) {
                hit = true;
                break;
            }
        if (!hit) return "an edge is covered by no clique";
    }
    return std::nullopt;
}

// Grow a clique to a maximal one, preferring small vertex ids.
inline std::vector<int> maximalize_clique(const Graph& g, bits::Row span) {
    for (int v = 0; v < g.n(); ++v)
        if (!bits::test(span, v) && bits::is_subset(span, g.row(v)))
            bits::set(span, v);
    return bits::to_list(span);
}

// Branch and bound state for the exact cover search.  Edges are assigned in
// canonical order; edge i may join any compatible block or open block
// `used` (never a later one), so assignments are restricted growth strings
// and each partition into clique-spanning blocks is visited once.  Blocks
// are tried in ascending order, hence the first complete assignment is the
// lexicographically least one.
struct EccSearch {
    const Graph& g;
    int k;
    std::vector<bits::Row> cl;    // closed neighborhoods
    std::vector<bits::Row> span;  // vertex set per open block
    bool found = false;

    EccSearch(const Graph& graph, int budget) : g(graph), k(budget) {
        for (int v = 0; v < g.n(); ++v) cl.push_back(g.closed_row(v));
    }

    bool fits(int b, const bits::Row& need) const {
        return bits::is_subset(span[b], need);
    }

    bool assign(std::size_t e, int used) {
        if (e == g.edge_count()) {
            found = true;
            return true;
        }
        auto [u, v] = g.edges()[e];
        bits::Row need = bits::and_(cl[u], cl[v]);
        const int top = std::min(used + 1, k);
        for (int b = 0; b < top; ++b) {
            const bool fresh = b == used;
            if (!fresh && !fits(b, need)) continue;
            bits::Row saved = span[b];
            bits::set(span[b], u);
            bits::set(span[b], v);
            if (assign(e + 1, used + (fresh ? 1 : 0))) return true;
            span[b] = std::move(saved);
        }
        return false;
    }
};

}  // namespace detail

// Exact edge clique cover decision: a cover with at most k cliques if one
// exists, otherwise nullopt.  The branch and bound assigns edges in
// canonical order to clique-compatible blocks; returned cliques are grown to
// maximal ones and canonicalized, so the answer is deterministic.
inline std::optional<CliqueCover> solve_ecc(const EccInstance& inst) {
    require(inst.k >= 1, E_ASSUMPTION,
            "edge clique cover budget k must be at least 1");
    const Graph& g = inst.g;
    if (g.edge_count() == 0) return CliqueCover{};
    require(g.edge_count() <= 25, E_BUDGET,
            "exact edge clique cover search handles at most 25 edges");
    const int k = std::min<int>(inst.k, static_cast<int>(g.edge_count()));
    detail::EccSearch search(g, k);
    search.span.assign(k, bits::make(g.n()));
    if (!search.assign(0, 0)) return std::nullopt;
    CliqueCover cover;
    for (const auto& s : search.span) {
        if (bits::count(s) == 0) continue;
        cover.cliques.push_back(detail::maximalize_clique(g, s));
    }
    std::sort(cover.cliques.begin(), cover.cliques.end());
    cover.cliques.erase(
        std::unique(cover.cliques.begin(), cover.cliques.end()),
        cover.cliques.end());
    auto defect = detail::cover_defect(g, cover);
    require(!defect, E_INVARIANT, "solver produced a defective cover");
    return cover;
}

// Delete every universal vertex of g and lower k by one per deletion,
// compacting vertex ids.  reduce_ecc refuses instances that carry universal
// vertices rather than repairing them silently; callers holding a gadget
// graph (or wanting the standard cleanup) invoke this first.  On the output
// of reduce_ecc it recovers the original graph.  No vertex outside the
// universal set can become universal after the deletion, so one pass
// suffices; k may leave the valid range and is re-checked downstream.
inline void strip_universal_vertices(Graph& g, int& k) {
    std::vector<int> uni = universal_vertices(g);
    if (uni.empty()) return;
    std::vector<char> drop(g.n(), 0);
    for (int u : uni) drop[u] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!drop[v]) keep.push_back(v);
    g = induced_subgraph(g, keep);
    k -= static_cast<int>(uni.size());
}

// The hardness gadget: append k universal vertices to g.  Requires a
// connected graph without universal vertices and 1 <= k <= |E(g)|; any
// violation is an error, never silently repaired.
inline ReductionOutput reduce_ecc(const EccInstance& inst) {
    const Graph& g = inst.g;
    require(components(g).size() == 1, E_ASSUMPTION,
            "reduce_ecc needs a connected graph");
    require(universal_vertices(g).empty(), E_ASSUMPTION,
            "reduce_ecc needs a graph without universal vertices");
    require(inst.k >= 1 && inst.k <= static_cast<int>(g.edge_count()),
            E_ASSUMPTION, "reduce_ecc needs 1 <= k <= |E(g)|");
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    ReductionOutput red;
    for (int i = 0; i < inst.k; ++i) {
        const int u = n + i;
        for (int v = 0; v < u; ++v) edges.push_back({v, u});
        red.u_set.push_back(u);
    }
    red.g_prime = Graph(n + inst.k, std::move(edges));
    require(universal_vertices(red.g_prime) == red.u_set, E_INVARIANT,
            "added vertices are not exactly the universal ones");
    std::vector<int> orig(n);
    for (int v = 0; v < n; ++v) orig[v] = v;
    require(induced_subgraph(red.g_prime, orig) == g, E_INVARIANT,
            "gadget does not extend the input graph");
    return red;
}

namespace detail {

// Validate a ReductionOutput (it may have been read from a file) and return
// the non-universal vertex ids in ascending order.
inline std::vector<int> reduction_core(const ReductionOutput& red) {
    require(!red.u_set.empty(), E_ASSUMPTION,
            "reduction carries no universal vertices");
    require(universal_vertices(red.g_prime) == red.u_set, E_ASSUMPTION,
            "u_set must list exactly the universal vertices of g_prime");
    std::vector<char> uni(red.g_prime.n(), 0);
    for (int u : red.u_set) uni[u] = 1;
    std::vector<int> core;
    for (int v = 0; v < red.g_prime.n(); ++v)
        if (!uni[v]) core.push_back(v);
    return core;
}

// Wrap a root's declared partition in a certificate and run the full
// balanced bisplit verification against g_prime.
inline VerifyOutcome verify_bisplit_root(const Graph& g_prime,
                                         const BalancedBisplitRoot& root) {
    RootCertificate cert;
    cert.root = root.b;
    cert.class_tag = RootClass::balanced_bisplit;
    cert.partition =
        BisplitPartition{root.x1, root.x2, root.y1, root.y2, root.matching};
    return verify_root(g_prime, cert);
}

}  // namespace detail

// Turn a k-clique cover of g into a balanced bisplit root of the gadget
// g_prime = g + k universal vertices.  Y gets one vertex per cover slot
// (cover padded to exactly k cliques by repeating its last one) followed by
// one private partner per core vertex; the universal vertices are complete
// to Y.  Cover cliques index the core of g_prime in ascending id order,
// which for reduce_ecc output is V(g) itself.
inline BalancedBisplitRoot build_root_from_cover(const ReductionOutput& red,
                                                 const CliqueCover& cover) {
    const std::vector<int> core = detail::reduction_core(red);
    const int n = static_cast<int>(core.size());
    const int k = static_cast<int>(red.u_set.size());
    const Graph g = induced_subgraph(red.g_prime, core);
    auto defect = detail::cover_defect(g, cover);
    require(!defect, E_ASSUMPTION, "cover rejected: " + defect.value_or(""));
    require(static_cast<int>(cover.cliques.size()) <= k, E_ASSUMPTION,
            "cover uses more cliques than the gadget has universal vertices");
    std::vector<std::vector<int>> slots = cover.cliques;
    const std::vector<int> pad =
        slots.empty() ? std::vector<int>{} : slots.back();
    while (static_cast<int>(slots.size()) < k) slots.push_back(pad);

    std::vector<Edge> edges;
    for (int u : red.u_set)
        for (int y = 0; y < k + n; ++y) edges.push_back({u, y});
    for (int i = 0; i < k; ++i)
        for (int v : slots[i]) edges.push_back({core[v], i});
    for (int j = 0; j < n; ++j) edges.push_back({core[j], k + j});

    BalancedBisplitRoot root;
    root.b = BipartiteGraph(red.g_prime.n(), k + n, std::move(edges));
    root.x1 = red.u_set;
    root.x2 = core;
    for (int i = 0; i < k; ++i) root.y1.push_back(i);
    for (int j = 0; j < n; ++j) {
        root.y2.push_back(k + j);
        root.matching.emplace_back(core[j], k + j);
    }
    VerifyOutcome vo = detail::verify_bisplit_root(red.g_prime, root);
    require(vo.ok, E_INVARIANT, "constructed root rejected: " + vo.reason);
    return root;
}

// Read a clique cover off a balanced bisplit root of the gadget: one clique
// per Y1 vertex, namely its core neighborhood.  The root is fully
// re-verified first.  Core vertices sharing a Y neighbor are adjacent in the
// half-square, so each neighborhood is a clique of g; conversely two matched
// core vertices share no Y2 vertex, hence every edge of g is realized
// through Y1 and the extracted cliques cover all of E(g).  At most
// |Y1| = |X1| <= k cliques come out.
inline CliqueCover extract_cover_from_root(const ReductionOutput& red,
                                           const BalancedBisplitRoot& root) {
    const std::vector<int> core = detail::reduction_core(red);
    VerifyOutcome vo = detail::verify_bisplit_root(red.g_prime, root);
    require(vo.ok, E_ASSUMPTION, "root rejected: " + vo.reason);
    std::vector<int> pos(red.g_prime.n(), -1);
    for (int j = 0; j < static_cast<int>(core.size()); ++j) pos[core[j]] = j;
    CliqueCover cover;
    for (int y : root.y1) {
        std::vector<int> q;
        for (int j = 0; j < static_cast<int>(core.size()); ++j)
            if (root.b.has_edge(core[j], y)) q.push_back(j);
        cover.cliques.push_back(std::move(q));
    }
    const Graph g = induced_subgraph(red.g_prime, core);
    auto defect = detail::cover_defect(g, cover);
    require(!defect, E_INVARIANT,
            "extracted neighborhoods fail to cover: " + defect.value_or(""));
    return cover;
}

}  // namespace hsq
