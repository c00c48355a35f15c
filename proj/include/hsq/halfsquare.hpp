#pragma once

// Recognizer/constructor pairs for half-squares of restricted bigraph
// classes.  Each hs_* function decides whether the input graph is the
// half-square of a root in the given class and, on yes, returns a
// certificate holding the constructed root plus the class witness; on no it
// returns an obstruction.  Every constructed certificate is re-verified
// through verify_root before being returned.
//
// The root's X side is identified with V(G): half_square(root, X) must equal
// G vertex for vertex, not merely up to isomorphism.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsq/classes.hpp"
#include "hsq/error.hpp"
#include "hsq/graph.hpp"
#include "hsq/recognition.hpp"

namespace hsq {

// A star witness: on `side`, every opposite vertex with degree >= 2 is
// adjacent to `center`.  center is -1 only when that side is empty.
struct StarWitness {
    Side side = Side::X;
    int center = -1;
};

struct RootCertificate {
    BipartiteGraph root;  // X side = V(G), Y side = auxiliary vertices
    RootClass class_tag = RootClass::convex;
    // star_convex: one entry; star_biconvex: X-side then Y-side entry
    std::vector<StarWitness> centers;
    // convex: Y chain order; biconvex: Y chain order then X vertex order
    std::vector<SideOrdering> orderings;
    // chordal_bipartite: Gamma-free doubly lexical order of the biadjacency
    std::optional<DoublyLexOrdering> dl;
    // convex / biconvex: the clique chain realized by the Y side
    CliqueChain chain;
    // tree: constructed root is a forest; must be connected unless set
    bool forest = false;
    // balanced_bisplit: the defining partition
    std::optional<BisplitPartition> partition;
};

struct RecognitionOutcome {
    bool yes = false;
    std::optional<RootCertificate> certificate;
    std::optional<Obstruction> obstruction;
};

struct VerifyOutcome {
    bool ok = false;
    std::string reason;  // names the violated invariant on failure
};

// ---------------------------------------------------------------------------
// Certificate verification
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_permutation(const std::vector<int>& p, int k) {
    if (static_cast<int>(p.size()) != k) return false;
    std::vector<char> seen(k, 0);
    for (int v : p) {
        if (v < 0 || v >= k || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool star_witness_holds(const BipartiteGraph& b, const StarWitness& w, std::string& why) {
    const int k = b.side_size(w.side);
    if (w.center == -1) {
        if (k != 0) {
            why = "star witness: missing center on a nonempty side";
            return false;
        }
        return true;
    }
    if (w.center < 0 || w.center >= k) {
        why = "star witness: center out of range";
        return false;
    }
    Side opp = w.side == Side::X ? Side::Y : Side::X;
    for (int z = 0; z < b.side_size(opp); ++z)
        if (b.degree(opp, z) >= 2 && !bits::test(b.row(opp, z), w.center)) {
            why = "star witness: a neighborhood of size >= 2 misses the center";
            return false;
        }
    return true;
}

inline bool side_ordering_holds(const BipartiteGraph& b, const SideOrdering& so, std::string& why) {
    const int k = b.side_size(so.side);
    if (static_cast<int>(so.perm.size()) != k) {
        why = "side ordering: permutation length mismatch";
        return false;
    }
    std::vector<int> pos(k, -1);
    for (int p = 0; p < k; ++p) {
        int v = so.perm[p];
        if (v < 0 || v >= k || pos[v] >= 0) {
            why = "side ordering: not a permutation";
            return false;
        }
        pos[v] = p;
    }
    Side opp = so.side == Side::X ? Side::Y : Side::X;
    for (int z = 0; z < b.side_size(opp); ++z) {
        const auto& nb = b.neighbors(opp, z);
        if (nb.size() <= 1) continue;
        int lo = k, hi = -1;
        for (int v : nb) {
            lo = std::min(lo, pos[v]);
            hi = std::max(hi, pos[v]);
        }
        if (hi - lo + 1 != static_cast<int>(nb.size())) {
            why = "side ordering: a neighborhood is not contiguous";
            return false;
        }
    }
    return true;
}

} // namespace detail

// Checks (a) half_square(root, X) equals G exactly and (b) the class witness
// itself is valid for the root.  Witnesses are validated directly against
// their definitions, never by re-running the recognizers.
inline VerifyOutcome verify_root(const Graph& g, const RootCertificate& cert) {
    VerifyOutcome out;
    const BipartiteGraph& b = cert.root;
    if (b.nx() != g.n()) {
        out.reason = "root X side size differs from |V(G)|";
        return out;
    }
    if (!(half_square(b, Side::X) == g)) {
        out.reason = "half-square of the root differs from G";
        return out;
    }
    std::string why;
    switch (cert.class_tag) {
        case RootClass::star_convex:
            if (cert.centers.size() != 1) {
                out.reason = "star convex certificate needs exactly one center";
                return out;
            }
            if (!detail::star_witness_holds(b, cert.centers[0], why)) {
                out.reason = why;
                return out;
            }
            break;
        case RootClass::star_biconvex: {
            if (cert.centers.size() != 2 || cert.centers[0].side != Side::X ||
                cert.centers[1].side != Side::Y) {
                out.reason = "star biconvex certificate needs an X center and a Y center";
                return out;
            }
            for (const auto& w : cert.centers)
                if (!detail::star_witness_holds(b, w, why)) {
                    out.reason = why;
                    return out;
                }
            break;
        }
        case RootClass::convex:
            if (cert.orderings.size() != 1 || cert.orderings[0].side != Side::Y) {
                out.reason = "convex certificate needs one Y-side ordering";
                return out;
            }
            if (!detail::side_ordering_holds(b, cert.orderings[0], why)) {
                out.reason = why;
                return out;
            }
            break;
        case RootClass::biconvex:
            if (cert.orderings.size() != 2 || cert.orderings[0].side != Side::Y ||
                cert.orderings[1].side != Side::X) {
                out.reason = "biconvex certificate needs a Y-side and an X-side ordering";
                return out;
            }
            for (const auto& so : cert.orderings)
                if (!detail::side_ordering_holds(b, so, why)) {
                    out.reason = why;
                    return out;
                }
            break;
        case RootClass::chordal_bipartite: {
            if (!cert.dl) {
                out.reason = "chordal bipartite certificate needs a doubly lexical ordering";
                return out;
            }
            if (!detail::is_permutation(cert.dl->row_perm, b.nx()) ||
                !detail::is_permutation(cert.dl->col_perm, b.ny())) {
                out.reason = "certificate row/column orders are not permutations";
                return out;
            }
            Matrix01 m = biadjacency_matrix(b);
            if (!is_doubly_lex_ordered(m, cert.dl->row_perm, cert.dl->col_perm)) {
                out.reason = "certificate ordering is not doubly lexical";
                return out;
            }
            if (!cert.dl->gamma_free || find_gamma(m, cert.dl->row_perm, cert.dl->col_perm)) {
                out.reason = "certificate ordering contains a Gamma";
                return out;
            }
            break;
        }
        case RootClass::tree: {
            Graph f = flatten(b);
            auto comps = components(f);
            if (static_cast<int>(f.edges().size()) != f.n() - static_cast<int>(comps.size())) {
                out.reason = "tree certificate root contains a cycle";
                return out;
            }
            if (!cert.forest && comps.size() > 1) {
                out.reason = "tree certificate root is disconnected";
                return out;
            }
            break;
        }
        case RootClass::balanced_bisplit: {
            if (!cert.partition) {
                out.reason = "balanced bisplit certificate needs a partition";
                return out;
            }
            if (b.nx() != b.ny()) {
                out.reason = "balanced bisplit root sides differ in size";
                return out;
            }
            const BisplitPartition& p = *cert.partition;
            std::vector<char> x1(b.nx(), 0), x2(b.nx(), 0), y2(b.ny(), 0);
            for (int v : p.x1) x1[v] = 1;
            for (int v : p.x2) x2[v] = 1;
            for (int v : p.y2) y2[v] = 1;
            for (int v = 0; v < b.nx(); ++v)
                if (x1[v] == x2[v]) {
                    out.reason = "balanced bisplit partition does not split X";
                    return out;
                }
            if (static_cast<int>(p.y1.size() + p.y2.size()) != b.ny()) {
                out.reason = "balanced bisplit partition does not split Y";
                return out;
            }
            for (int v : p.x1)
                if (b.degree(Side::X, v) != b.ny()) {
                    out.reason = "an X1 vertex is not adjacent to all of Y";
                    return out;
                }
            if (p.matching.size() != p.x2.size() || p.matching.size() != p.y2.size()) {
                out.reason = "balanced bisplit matching size mismatch";
                return out;
            }
            std::vector<char> mx(b.nx(), 0), my(b.ny(), 0);
            for (auto [x, y] : p.matching) {
                if (!x2[x] || !y2[y] || mx[x] || my[y]) {
                    out.reason = "balanced bisplit matching is not a perfect X2-Y2 matching";
                    return out;
                }
                mx[x] = my[y] = 1;
            }
            for (auto [x, y] : b.edges()) {
                if (!x2[x] || !y2[y]) continue;
                bool matched = false;
                for (auto [a, c] : p.matching) matched = matched || (a == x && c == y);
                if (!matched) {
                    out.reason = "an X2-Y2 edge lies outside the matching";
                    return out;
                }
            }
            for (auto [x, y] : p.matching)
                if (!bits::test(b.row(Side::X, x), y)) {
                    out.reason = "a matching pair is not an edge of the root";
                    return out;
                }
            break;
        }
    }
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

namespace detail {

// Chain positions as a Y-side ordering of the clique incidence root:
// perm[p] = canonical index of the clique at chain position p.
inline SideOrdering chain_ordering(const Graph& g, const CliqueChain& chain) {
    CliqueSet canon = maximal_cliques(g);
    SideOrdering so;
    so.side = Side::Y;
    for (const auto& q : chain.cliques) {
        auto it = std::lower_bound(canon.begin(), canon.end(), q);
        require(it != canon.end() && *it == q, E_INVARIANT,
                "chain ordering: chain clique missing from the canonical list");
        so.perm.push_back(static_cast<int>(it - canon.begin()));
    }
    return so;
}

inline RecognitionOutcome certify(const Graph& g, RootCertificate cert) {
    VerifyOutcome v = verify_root(g, cert);
    require(v.ok, E_INVARIANT, ("constructed root failed verification: " + v.reason).c_str());
    RecognitionOutcome out;
    out.yes = true;
    out.certificate = std::move(cert);
    return out;
}

inline RecognitionOutcome refuse(Obstruction ob) {
    RecognitionOutcome out;
    out.obstruction = std::move(ob);
    return out;
}

// Components with at least one edge.
inline std::vector<std::vector<int>> big_components(const Graph& g) {
    std::vector<std::vector<int>> big;
    for (auto& c : components(g))
        if (c.size() >= 2) big.push_back(std::move(c));
    return big;
}

// Witness for two big components: the lexicographically first edge of each.
inline Obstruction two_big_components(const Graph& g, const std::vector<int>& c1,
                                      const std::vector<int>& c2) {
    Obstruction ob;
    ob.kind = Obstruction::Kind::extra_big_component;
    for (const auto* c : {&c1, &c2}) {
        std::vector<char> in(g.n(), 0);
        for (int v : *c) in[v] = 1;
        bool done = false;
        for (auto [u, v] : g.edges()) {
            if (!done && in[u] && in[v]) {
                ob.vertices.push_back(u);
                ob.vertices.push_back(v);
                done = true;
            }
        }
        require(done, E_INVARIANT, "big component without an edge");
    }
    return ob;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Star convex half-squares
// ---------------------------------------------------------------------------

// Yes iff (i) at most one component with an edge exists and it has an
// internally universal vertex, or (ii) the true-twin quotient is split.
// Case (i) root: one Y-hub over the universal set when the rest R is empty,
// otherwise Y = matching copies of R plus one Y-vertex per edge inside R,
// with the universal set adjacent to all of Y.  Case (ii) root: a hub x0
// over the clique-side classes plus one Y-vertex per stable-side class
// covering the class and its neighborhood classes.
inline RecognitionOutcome hs_star_convex(const Graph& g) {
    const int n = g.n();
    if (n == 0) {
        RootCertificate cert;
        cert.root = BipartiteGraph(0, 0, {});
        cert.class_tag = RootClass::star_convex;
        cert.centers = {StarWitness{Side::X, -1}};
        return detail::certify(g, std::move(cert));
    }
    auto big = detail::big_components(g);
    if (big.size() <= 1) {
        std::vector<int> uni;
        if (!big.empty()) {
            for (int v : big[0]) {
                bool ok = true;
                for (int u : big[0])
                    if (u != v && !g.adjacent(u, v)) { ok = false; break; }
                if (ok) uni.push_back(v);
            }
        }
        if (big.empty() || !uni.empty()) {
            // case (i), Fact-1 construction
            std::vector<char> in_uni(n, 0), in_big(n, 0);
            for (int v : uni) in_uni[v] = 1;
            for (const auto& c : big)
                for (int v : c) in_big[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (in_big[v] && !in_uni[v]) rest.push_back(v);
            std::vector<Edge> be;
            int ny;
            if (rest.empty()) {
                ny = 1;
                for (int u : uni) be.push_back({u, 0});
            } else {
                std::vector<Edge> inner;
                for (auto [u, v] : g.edges())
                    if (!in_uni[u] && !in_uni[v]) inner.push_back({u, v});
                const int nr = static_cast<int>(rest.size());
                ny = nr + static_cast<int>(inner.size());
                std::vector<int> ridx(n, -1);
                for (int i = 0; i < nr; ++i) ridx[rest[i]] = i;
                for (int i = 0; i < nr; ++i) be.push_back({rest[i], i});
                for (int j = 0; j < static_cast<int>(inner.size()); ++j) {
                    be.push_back({inner[j].first, nr + j});
                    be.push_back({inner[j].second, nr + j});
                }
                for (int u : uni)
                    for (int y = 0; y < ny; ++y) be.push_back({u, y});
            }
            RootCertificate cert;
            cert.root = BipartiteGraph(n, ny, std::move(be));
            cert.class_tag = RootClass::star_convex;
            cert.centers = {StarWitness{Side::X, uni.empty() ? 0 : uni.front()}};
            return detail::certify(g, std::move(cert));
        }
    }
    // case (ii): split true-twin quotient
    TwinPartition tp = true_twin_classes(g);
    Graph q = quotient_graph(g, tp);
    SplitResult sp = is_split(q);
    if (!sp.split) {
        Obstruction ob = *sp.obstruction;
        for (int& v : ob.vertices) v = tp.reps[v];
        return detail::refuse(std::move(ob));
    }
    const int ns = static_cast<int>(sp.partition.stable.size());
    std::vector<int> y_of_stable(q.n(), -1);
    for (int i = 0; i < ns; ++i) y_of_stable[sp.partition.stable[i]] = 1 + i;
    std::vector<char> in_clique(q.n(), 0);
    for (int c : sp.partition.clique) in_clique[c] = 1;
    std::vector<Edge> be;
    for (int v = 0; v < n; ++v) {
        int cls = tp.class_of[v];
        if (in_clique[cls]) {
            be.push_back({v, 0});
            for (int s : q.neighbors(cls))
                if (!in_clique[s]) be.push_back({v, y_of_stable[s]});
        } else {
            be.push_back({v, y_of_stable[cls]});
        }
    }
    RootCertificate cert;
    cert.root = BipartiteGraph(n, 1 + ns, std::move(be));
    cert.class_tag = RootClass::star_convex;
    cert.centers = {StarWitness{Side::Y, 0}};
    return detail::certify(g, std::move(cert));
}

// ---------------------------------------------------------------------------
// Star biconvex half-squares
// ---------------------------------------------------------------------------

// Yes iff at most one component with an edge exists and that component's
// true-twin quotient is a split graph with a universal vertex.  Root: the
// split construction of hs_star_convex case (ii) applied to the big
// component, plus a pendant Y-vertex for every isolated vertex; the X-side
// star centers on a member of a universal quotient class.
inline RecognitionOutcome hs_star_biconvex(const Graph& g) {
    const int n = g.n();
    auto big = detail::big_components(g);
    if (big.size() >= 2) return detail::refuse(detail::two_big_components(g, big[0], big[1]));
    if (big.empty()) {
        // edgeless: one hub plus a pendant per vertex
        std::vector<Edge> be;
        for (int v = 0; v < n; ++v) be.push_back({v, 1 + v});
        RootCertificate cert;
        cert.root = BipartiteGraph(n, n == 0 ? 0 : 1 + n, std::move(be));
        cert.class_tag = RootClass::star_biconvex;
        cert.centers = {StarWitness{Side::X, n == 0 ? -1 : 0},
                        StarWitness{Side::Y, n == 0 ? -1 : 0}};
        return detail::certify(g, std::move(cert));
    }
    TwinPartition tp = true_twin_classes(g);
    Graph q = quotient_graph(g, tp);
    // quotient ids of the big component; the quotient of the big component
    // is q restricted to them
    std::vector<char> in_big(n, 0);
    for (int v : big[0]) in_big[v] = 1;
    std::vector<int> bigq;
    for (int c = 0; c < q.n(); ++c)
        if (in_big[tp.reps[c]]) bigq.push_back(c);
    Graph qbig = induced_subgraph(q, bigq);  // bigq is ascending
    SplitResult sp = is_split(qbig);
    if (!sp.split) {
        Obstruction ob = *sp.obstruction;
        for (int& v : ob.vertices) v = tp.reps[bigq[v]];
        return detail::refuse(std::move(ob));
    }
    std::vector<int> quni = universal_vertices(qbig);
    if (quni.empty()) {
        // witness: pairs (vertex, non-neighbor) inside the big quotient
        // component, one pair per vertex, in G vertex ids
        Obstruction ob;
        ob.kind = Obstruction::Kind::no_universal_vertex;
        for (int c = 0; c < qbig.n(); ++c) {
            int miss = -1;
            for (int d = 0; d < qbig.n() && miss < 0; ++d)
                if (d != c && !qbig.adjacent(c, d)) miss = d;
            require(miss >= 0, E_INVARIANT, "vertex universal despite empty universal set");
            ob.vertices.push_back(tp.reps[bigq[c]]);
            ob.vertices.push_back(tp.reps[bigq[miss]]);
        }
        return detail::refuse(std::move(ob));
    }
    // normalize the partition: universal vertices always fit the clique side
    std::vector<int> cq = sp.partition.clique, st;
    {
        std::vector<char> uni_mask(qbig.n(), 0);
        for (int u : quni) uni_mask[u] = 1;
        for (int s : sp.partition.stable)
            if (uni_mask[s]) cq.push_back(s);
            else st.push_back(s);
        std::sort(cq.begin(), cq.end());
    }
    const int ns = static_cast<int>(st.size());
    // Y layout: hub 0, one vertex per stable class, then one per isolated
    std::vector<int> y_of_stable(qbig.n(), -1);
    for (int i = 0; i < ns; ++i) y_of_stable[st[i]] = 1 + i;
    std::vector<char> in_clique(qbig.n(), 0);
    for (int c : cq) in_clique[c] = 1;
    std::vector<int> qbig_pos(q.n(), -1);
    for (int i = 0; i < static_cast<int>(bigq.size()); ++i) qbig_pos[bigq[i]] = i;
    std::vector<int> isolated;
    for (int v = 0; v < n; ++v)
        if (!in_big[v]) isolated.push_back(v);
    std::vector<Edge> be;
    for (int v = 0; v < n; ++v) {
        if (!in_big[v]) continue;
        int cls = qbig_pos[tp.class_of[v]];
        if (in_clique[cls]) {
            be.push_back({v, 0});
            for (int s : qbig.neighbors(cls))
                if (!in_clique[s]) be.push_back({v, y_of_stable[s]});
        } else {
            be.push_back({v, y_of_stable[cls]});
        }
    }
    for (int i = 0; i < static_cast<int>(isolated.size()); ++i)
        be.push_back({isolated[i], 1 + ns + i});
    // X-side star center: smallest member of the smallest universal class
    int u_center = tp.classes[bigq[quni.front()]].front();
    RootCertificate cert;
    cert.root = BipartiteGraph(n, 1 + ns + static_cast<int>(isolated.size()), std::move(be));
    cert.class_tag = RootClass::star_biconvex;
    cert.centers = {StarWitness{Side::X, u_center}, StarWitness{Side::Y, 0}};
    return detail::certify(g, std::move(cert));
}

// ---------------------------------------------------------------------------
// Convex / biconvex / chordal bipartite / tree half-squares
// ---------------------------------------------------------------------------

// Yes iff G is interval; root = vertex-clique incidence with the Y side
// ordered along the clique chain.
inline RecognitionOutcome hs_convex(const Graph& g) {
    IntervalResult iv = interval_model(g);
    if (!iv.interval) return detail::refuse(*iv.obstruction);
    RootCertificate cert;
    cert.root = vertex_clique_incidence(g);
    cert.class_tag = RootClass::convex;
    cert.orderings = {detail::chain_ordering(g, iv.chain)};
    cert.chain = std::move(iv.chain);
    return detail::certify(g, std::move(cert));
}

// Yes iff G is unit interval; root = vertex-clique incidence with the chain
// order on Y and the (left, right, id)-lexicographic vertex order on X.
inline RecognitionOutcome hs_biconvex(const Graph& g) {
    UnitIntervalResult ui = is_unit_interval(g);
    if (!ui.unit_interval) return detail::refuse(*ui.obstruction);
    RootCertificate cert;
    cert.root = vertex_clique_incidence(g);
    cert.class_tag = RootClass::biconvex;
    SideOrdering xo;
    xo.side = Side::X;
    xo.perm = ui.vertex_order;
    cert.orderings = {detail::chain_ordering(g, ui.chain), std::move(xo)};
    cert.chain = std::move(ui.chain);
    return detail::certify(g, std::move(cert));
}

// Yes iff G is strongly chordal; root = vertex-clique incidence, witnessed
// by a Gamma-free doubly lexical ordering of the root's biadjacency matrix.
inline RecognitionOutcome hs_chordal_bipartite(const Graph& g) {
    StronglyChordalResult sc = is_strongly_chordal(g);
    if (!sc.strongly_chordal) return detail::refuse(*sc.obstruction);
    RootCertificate cert;
    cert.root = vertex_clique_incidence(g);
    cert.class_tag = RootClass::chordal_bipartite;
    ChordalBipartiteResult cb = is_chordal_bipartite(cert.root);
    require(cb.chordal_bipartite, E_INVARIANT,
            "clique incidence of a strongly chordal graph must be chordal bipartite");
    cert.dl = std::move(cb.ordering);
    return detail::certify(g, std::move(cert));
}

// Yes iff G is a block graph; strict mode additionally requires G connected
// so the root is a single tree, forest mode takes one tree per component.
// Root = vertex-clique incidence (its flattening is the block-cut incidence
// forest).
inline RecognitionOutcome hs_tree(const Graph& g, bool forest = false) {
    BlockGraphResult bl = is_block_graph(g);
    if (!bl.block_graph) return detail::refuse(*bl.obstruction);
    auto comps = components(g);
    if (!forest && comps.size() > 1) {
        Obstruction ob;
        ob.kind = Obstruction::Kind::extra_big_component;
        ob.vertices = {comps[0].front(), comps[1].front()};
        return detail::refuse(std::move(ob));
    }
    RootCertificate cert;
    cert.root = vertex_clique_incidence(g);
    cert.class_tag = RootClass::tree;
    cert.forest = forest;
    return detail::certify(g, std::move(cert));
}

} // namespace hsq
