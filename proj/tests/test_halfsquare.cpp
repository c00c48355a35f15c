#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "hsq/halfsquare.hpp"
#include "hsq/oracle.hpp"
#include "test_util.hpp"

using namespace hsq;

namespace {

// Obstruction witnesses must be genuine in g, interpreted per kind.
void check_obstruction(const Graph& g, const Obstruction& ob) {
    const auto& w = ob.vertices;
    switch (ob.kind) {
        case Obstruction::Kind::hole:
            REQUIRE(tu::is_induced_cycle(g, w));
            break;
        case Obstruction::Kind::claw:
            REQUIRE(tu::is_induced_claw(g, w));
            break;
        case Obstruction::Kind::k_sun:
            REQUIRE(tu::is_induced_sun(g, w));
            break;
        case Obstruction::Kind::diamond:
            REQUIRE(tu::is_induced_diamond(g, w));
            break;
        case Obstruction::Kind::non_split_quotient:
            REQUIRE(tu::is_split_obstruction(g, w));
            break;
        case Obstruction::Kind::extra_big_component: {
            // two edges from distinct components, or two vertices from
            // distinct components (tree strictness)
            REQUIRE((w.size() == 2 || w.size() == 4));
            auto comps = components(g);
            std::vector<int> comp_of(g.n());
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
            if (w.size() == 4) {
                REQUIRE(g.adjacent(w[0], w[1]));
                REQUIRE(g.adjacent(w[2], w[3]));
                REQUIRE(comp_of[w[0]] != comp_of[w[2]]);
            } else {
                REQUIRE(comp_of[w[0]] != comp_of[w[1]]);
            }
            break;
        }
        case Obstruction::Kind::no_universal_vertex: {
            // pairs (v, non-neighbor of v), all inside the big component
            REQUIRE(w.size() % 2 == 0);
            REQUIRE_FALSE(w.empty());
            for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
                REQUIRE(w[i] != w[i + 1]);
                REQUIRE_FALSE(g.adjacent(w[i], w[i + 1]));
            }
            break;
        }
        default:
            break;  // not_interval / not_cop carry matrix indices
    }
}

void check_all_recognizers(const Graph& g, bool compare_brutes) {
    struct Case {
        RecognitionOutcome r;
        Verdict brute;
    };
    std::vector<Case> cases;
    cases.push_back({hs_star_convex(g), brute_star_convex_condition(g)});
    cases.push_back({hs_star_biconvex(g), brute_star_biconvex_condition(g)});
    cases.push_back({hs_convex(g), brute_interval(g)});
    cases.push_back({hs_biconvex(g), brute_unit_interval(g)});
    cases.push_back({hs_chordal_bipartite(g), brute_strongly_chordal(g)});
    {
        Verdict bl = brute_block(g);
        Verdict strict = (bl == Verdict::Yes && components(g).size() <= 1) ? Verdict::Yes
                         : bl == Verdict::Refused                          ? Verdict::Refused
                                                                          : Verdict::No;
        cases.push_back({hs_tree(g), strict});
        cases.push_back({hs_tree(g, true), bl});
    }
    for (const auto& c : cases) {
        if (compare_brutes && c.brute != Verdict::Refused)
            REQUIRE(c.r.yes == (c.brute == Verdict::Yes));
        if (c.r.yes) {
            REQUIRE(c.r.certificate.has_value());
            REQUIRE_FALSE(c.r.obstruction.has_value());
            auto v = verify_root(g, *c.r.certificate);
            REQUIRE(v.ok);
        } else {
            REQUIRE(c.r.obstruction.has_value());
            REQUIRE_FALSE(c.r.certificate.has_value());
            if (!c.r.obstruction->refused) check_obstruction(g, *c.r.obstruction);
        }
    }
    // class hierarchy
    bool sb = cases[1].r.yes, sc = cases[0].r.yes, cv = cases[2].r.yes, bc = cases[3].r.yes,
         cb = cases[4].r.yes, tr = cases[5].r.yes, fo = cases[6].r.yes;
    if (bc) REQUIRE(cv);
    if (cv) REQUIRE(cb);
    if (tr) REQUIRE(cb);
    if (tr) REQUIRE(fo);
    if (fo && components(g).size() <= 1) REQUIRE(tr);
    if (sb) REQUIRE(sc);
}

} // namespace

TEST_CASE("star convex half squares cover both construction branches") {
    // universal-vertex branch
    auto r1 = hs_star_convex(tu::claw());
    REQUIRE(r1.yes);
    REQUIRE(r1.certificate->centers.size() == 1);
    REQUIRE(r1.certificate->centers[0].side == Side::X);
    REQUIRE(r1.certificate->centers[0].center == 0);
    REQUIRE(r1.certificate->root.ny() == 3);  // matching copies of the three leaves

    // split-quotient branch: twin classes {0,1} and {2,3}, quotient 2K1
    auto r2 = hs_star_convex(tu::two_k2());
    REQUIRE(r2.yes);
    REQUIRE(r2.certificate->centers[0].side == Side::Y);
    REQUIRE(r2.certificate->centers[0].center == 0);

    auto r3 = hs_star_convex(tu::cycle(4));
    REQUIRE_FALSE(r3.yes);
    REQUIRE(r3.obstruction->kind == Obstruction::Kind::non_split_quotient);
    REQUIRE(tu::is_split_obstruction(tu::cycle(4), r3.obstruction->vertices));

    // clique plus isolated vertex: universal branch with empty rest
    Graph k3i = tu::disjoint_union(tu::complete(3), tu::edgeless(1));
    auto r4 = hs_star_convex(k3i);
    REQUIRE(r4.yes);
    REQUIRE(r4.certificate->root.ny() == 1);

    auto r5 = hs_star_convex(tu::edgeless(0));
    REQUIRE(r5.yes);
    REQUIRE(r5.certificate->root.ny() == 0);
    REQUIRE(hs_star_convex(tu::edgeless(4)).yes);
}

TEST_CASE("star biconvex half squares need one big component and a universal quotient vertex") {
    auto k3 = hs_star_biconvex(tu::complete(3));
    REQUIRE(k3.yes);
    REQUIRE(k3.certificate->root.ny() == 1);
    REQUIRE(k3.certificate->centers.size() == 2);
    REQUIRE(k3.certificate->centers[0].side == Side::X);
    REQUIRE(k3.certificate->centers[1].side == Side::Y);

    auto p4 = hs_star_biconvex(tu::path(4));
    REQUIRE_FALSE(p4.yes);
    REQUIRE(p4.obstruction->kind == Obstruction::Kind::no_universal_vertex);
    check_obstruction(tu::path(4), *p4.obstruction);

    auto tk = hs_star_biconvex(tu::two_k2());
    REQUIRE_FALSE(tk.yes);
    REQUIRE(tk.obstruction->kind == Obstruction::Kind::extra_big_component);
    check_obstruction(tu::two_k2(), *tk.obstruction);

    // substituted split graph with universal vertex: paw = K1 join (K1 + K2)?
    // paw's quotient is the paw itself minus twin {0,1}? compute: vertices
    // 0,1 adjacent and share closed neighborhood {0,1,2}: quotient = P3 with
    // universal middle, split -> yes
    REQUIRE(hs_star_biconvex(tu::paw()).yes);
    REQUIRE(hs_star_biconvex(tu::edgeless(3)).yes);
    REQUIRE(hs_star_biconvex(tu::edgeless(0)).yes);
}

TEST_CASE("convex half squares are the interval graphs") {
    auto cl = hs_convex(tu::claw());
    REQUIRE(cl.yes);

    auto c4 = hs_convex(tu::cycle(4));
    REQUIRE_FALSE(c4.yes);
    REQUIRE(c4.obstruction->kind == Obstruction::Kind::hole);

    auto p4 = hs_convex(tu::path(4));
    REQUIRE(p4.yes);
    Graph f = flatten(p4.certificate->root);
    REQUIRE(f.n() == 7);
    REQUIRE(f.edges().size() == 6);  // the root is the path P7
    REQUIRE(components(f).size() == 1);
    REQUIRE(p4.certificate->orderings.size() == 1);
    REQUIRE(p4.certificate->orderings[0].side == Side::Y);
}

TEST_CASE("biconvex half squares are the unit interval graphs") {
    auto cl = hs_biconvex(tu::claw());
    REQUIRE_FALSE(cl.yes);
    REQUIRE(cl.obstruction->kind == Obstruction::Kind::claw);
    REQUIRE(tu::is_induced_claw(tu::claw(), cl.obstruction->vertices));

    auto p4 = hs_biconvex(tu::path(4));
    REQUIRE(p4.yes);
    REQUIRE(p4.certificate->orderings.size() == 2);
    REQUIRE(p4.certificate->orderings[1].side == Side::X);
    REQUIRE(p4.certificate->orderings[1].perm == std::vector<int>{0, 1, 2, 3});
    const auto& ch = p4.certificate->chain;
    REQUIRE(ch.left[0] == 1);
    REQUIRE(ch.right[0] == 1);
    REQUIRE(ch.left[1] == 1);
    REQUIRE(ch.right[1] == 2);
    REQUIRE(ch.left[2] == 2);
    REQUIRE(ch.right[2] == 3);
    REQUIRE(ch.left[3] == 3);
    REQUIRE(ch.right[3] == 3);

    REQUIRE(hs_biconvex(tu::complete(3)).yes);
}

TEST_CASE("chordal bipartite half squares are the strongly chordal graphs") {
    auto s3 = hs_chordal_bipartite(tu::sun3());
    REQUIRE_FALSE(s3.yes);
    REQUIRE(s3.obstruction->kind == Obstruction::Kind::k_sun);

    auto p4 = hs_chordal_bipartite(tu::path(4));
    REQUIRE(p4.yes);
    REQUIRE(p4.certificate->dl.has_value());
    REQUIRE(p4.certificate->dl->gamma_free);

    REQUIRE_FALSE(hs_chordal_bipartite(tu::cycle(4)).yes);
}

TEST_CASE("tree half squares are the connected block graphs") {
    auto k3 = hs_tree(tu::complete(3));
    REQUIRE(k3.yes);
    Graph f = flatten(k3.certificate->root);
    REQUIRE(f.n() == 4);           // K_{1,3}: one Y-vertex for the K3 clique
    REQUIRE(f.edges().size() == 3);

    auto di = hs_tree(tu::diamond());
    REQUIRE_FALSE(di.yes);
    REQUIRE(di.obstruction->kind == Obstruction::Kind::diamond);

    // a tree's clique-incidence root is exactly its subdivision
    for (const Graph& t : {tu::path(5), tu::star(4)}) {
        auto r = hs_tree(t);
        REQUIRE(r.yes);
        REQUIRE(r.certificate->root == subdivision(t));
    }

    auto strict = hs_tree(tu::two_k2());
    REQUIRE_FALSE(strict.yes);
    REQUIRE(strict.obstruction->kind == Obstruction::Kind::extra_big_component);
    auto forest = hs_tree(tu::two_k2(), true);
    REQUIRE(forest.yes);
    REQUIRE(forest.certificate->forest);

    // disconnected edgeless input: no tree root exists but a forest does
    REQUIRE_FALSE(hs_tree(tu::edgeless(2)).yes);
    REQUIRE(hs_tree(tu::edgeless(2), true).yes);
    REQUIRE(hs_tree(tu::edgeless(1)).yes);
    REQUIRE(hs_tree(tu::edgeless(0)).yes);
}

TEST_CASE("all recognizers agree with the oracle conditions on small graphs") {
    for (int n = 0; n <= 6; ++n)
        enumerate_graphs(n, false, [&](const Graph& g) { check_all_recognizers(g, true); });
}

TEST_CASE("recognizers stay sound on random seven vertex graphs") {
    std::mt19937_64 rng(47);
    for (double p : {0.2, 0.5, 0.8})
        for (int rep = 0; rep < 100; ++rep) {
            Graph g = random_graph(7, p, rng);
            check_all_recognizers(g, true);
        }
}

TEST_CASE("chordal bipartite roots keep every clique inside a star") {
    // every maximal clique of the half-square lies in some Y-neighborhood
    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, false, [&](const Graph& g) {
            auto r = hs_chordal_bipartite(g);
            if (!r.yes) return;
            const BipartiteGraph& b = r.certificate->root;
            Graph h = half_square(b, Side::X);
            for (const auto& q : maximal_cliques(h)) {
                bool inside = false;
                for (int y = 0; y < b.ny() && !inside; ++y) {
                    bool all = true;
                    for (int v : q)
                        if (!bits::test(b.row(Side::Y, y), v)) { all = false; break; }
                    inside = all;
                }
                REQUIRE(inside);
            }
        });
}

TEST_CASE("biconvex certificates sort vertices so cliques are intervals") {
    std::mt19937_64 rng(48);
    for (int rep = 0; rep < 120; ++rep) {
        Graph g = random_unit_interval_graph(3 + rep % 12, 20, 3, rng);
        auto r = hs_biconvex(g);
        if (!r.yes) continue;
        const auto& order = r.certificate->orderings[1].perm;
        std::vector<int> pos(g.n());
        for (int p = 0; p < g.n(); ++p) pos[order[p]] = p;
        for (const auto& q : r.certificate->chain.cliques) {
            int lo = g.n(), hi = -1;
            for (int v : q) {
                lo = std::min(lo, pos[v]);
                hi = std::max(hi, pos[v]);
            }
            REQUIRE(hi - lo + 1 == static_cast<int>(q.size()));
        }
    }
}

TEST_CASE("verify root rejects tampered certificates") {
    Graph p4 = tu::path(4);
    auto good = hs_biconvex(p4);
    REQUIRE(verify_root(p4, *good.certificate).ok);

    // drop a root edge
    RootCertificate bad = *good.certificate;
    std::vector<Edge> e = bad.root.edges();
    e.pop_back();
    bad.root = BipartiteGraph(bad.root.nx(), bad.root.ny(), std::move(e));
    auto v1 = verify_root(p4, bad);
    REQUIRE_FALSE(v1.ok);
    REQUIRE(v1.reason == "half-square of the root differs from G");

    // claim a convex root for C4
    auto cv = hs_convex(p4);
    auto v2 = verify_root(tu::cycle(4), *cv.certificate);
    REQUIRE_FALSE(v2.ok);

    // wrong side size
    auto v3 = verify_root(tu::path(5), *cv.certificate);
    REQUIRE_FALSE(v3.ok);
    REQUIRE(v3.reason == "root X side size differs from |V(G)|");

    // corrupt the vertex ordering
    RootCertificate bad2 = *good.certificate;
    std::swap(bad2.orderings[1].perm[0], bad2.orderings[1].perm[3]);
    REQUIRE_FALSE(verify_root(p4, bad2).ok);

    // corrupt a star center
    Graph claw = tu::claw();
    auto sc = hs_star_convex(claw);
    RootCertificate bad3 = *sc.certificate;
    bad3.centers[0].center = 2;  // leaf copies never contain a leaf center
    REQUIRE_FALSE(verify_root(claw, bad3).ok);

    // corrupt the doubly lexical witness
    Graph p3 = tu::path(3);
    auto cb = hs_chordal_bipartite(p3);
    RootCertificate bad4 = *cb.certificate;
    bad4.dl->row_perm = {0, 0, 1};
    REQUIRE_FALSE(verify_root(p3, bad4).ok);
}

TEST_CASE("half square recognizers are deterministic") {
    std::mt19937_64 rng(49);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = tu::random_graph(7, 0.4, rng);
        for (auto* fn : {hs_star_convex, hs_star_biconvex, hs_convex, hs_biconvex,
                         hs_chordal_bipartite}) {
            auto a = fn(g), b = fn(g);
            REQUIRE(a.yes == b.yes);
            if (a.yes) {
                REQUIRE(a.certificate->root == b.certificate->root);
            } else {
                REQUIRE(a.obstruction->kind == b.obstruction->kind);
                REQUIRE(a.obstruction->vertices == b.obstruction->vertices);
            }
        }
    }
}
