#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "hsq/halfsquare.hpp"
#include "hsq/oracle.hpp"
#include "test_util.hpp"

using namespace hsq;

namespace {

// Triangle {0,1,2} with pendant legs 3,4,5 off distinct corners.
Graph net() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// Complete k-sun: clique t_0..t_{k-1}, stable s_j adjacent t_j, t_{j+1}.
Graph k_sun(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.push_back({i, j});
    for (int j = 0; j < k; ++j) {
        e.push_back({k + j, j});
        e.push_back({k + j, (j + 1) % k});
    }
    return Graph(2 * k, std::move(e));
}

// Ground truth for bisplit root existence by scanning every n x n bigraph.
bool bisplit_root_exists(const Graph& g) {
    const int n = g.n();
    REQUIRE(n <= 4);
    const int cells = n * n;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
        std::vector<Edge> be;
        for (int c = 0; c < cells; ++c)
            if (mask >> c & 1) be.push_back({c / n, c % n});
        BipartiteGraph b(n, n, std::move(be));
        if (is_balanced_bisplit(b).balanced_bisplit &&
            half_square(b, Side::X) == g)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("chordality brutes on pinned graphs") {
    REQUIRE(brute_chordal(tu::cycle(4)) == Verdict::No);
    REQUIRE(brute_chordal(tu::cycle(5)) == Verdict::No);
    REQUIRE(brute_chordal(tu::cycle(6)) == Verdict::No);
    REQUIRE(brute_chordal(tu::path(8)) == Verdict::Yes);
    REQUIRE(brute_chordal(tu::complete(5)) == Verdict::Yes);
    REQUIRE(brute_chordal(tu::diamond()) == Verdict::Yes);
    // complete suns are chordal: the inner clique chords every cycle
    REQUIRE(brute_chordal(k_sun(3)) == Verdict::Yes);
    REQUIRE(brute_chordal(k_sun(4)) == Verdict::Yes);
    REQUIRE(brute_chordal(tu::cycle(13)) == Verdict::Refused);

    REQUIRE(brute_sun_free(k_sun(3)) == Verdict::No);
    REQUIRE(brute_sun_free(k_sun(4)) == Verdict::No);
    // too small to hold a sun, chordality is not consulted
    REQUIRE(brute_sun_free(tu::cycle(4)) == Verdict::Yes);
    REQUIRE(brute_sun_free(tu::path(5)) == Verdict::Yes);

    REQUIRE(brute_strongly_chordal(k_sun(3)) == Verdict::No);
    REQUIRE(brute_strongly_chordal(k_sun(4)) == Verdict::No);
    REQUIRE(brute_strongly_chordal(tu::cycle(6)) == Verdict::No);
    REQUIRE(brute_strongly_chordal(tu::path(9)) == Verdict::Yes);
    // two triangles glued at a vertex: a block graph
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    REQUIRE(brute_strongly_chordal(bowtie) == Verdict::Yes);
    // chordal but beyond the sun scan cap
    REQUIRE(brute_strongly_chordal(tu::path(11)) == Verdict::Refused);
}

TEST_CASE("interval family brutes on pinned graphs") {
    REQUIRE(brute_interval(tu::path(7)) == Verdict::Yes);
    REQUIRE(brute_interval(tu::claw()) == Verdict::Yes);
    REQUIRE(brute_interval(tu::complete(6)) == Verdict::Yes);
    REQUIRE(brute_interval(tu::cycle(4)) == Verdict::No);
    REQUIRE(brute_interval(tu::cycle(5)) == Verdict::No);
    // asteroidal triples: chordal yet not interval
    REQUIRE(brute_interval(tu::sun3()) == Verdict::No);
    REQUIRE(brute_interval(net()) == Verdict::No);
    // eleven maximal cliques exceed the ordering cap
    REQUIRE(brute_interval(tu::path(12)) == Verdict::Refused);

    REQUIRE(brute_unit_interval(tu::path(7)) == Verdict::Yes);
    REQUIRE(brute_unit_interval(tu::complete(4)) == Verdict::Yes);
    REQUIRE(brute_unit_interval(tu::claw()) == Verdict::No);
    REQUIRE(brute_unit_interval(tu::cycle(4)) == Verdict::No);

    REQUIRE(brute_claw_free(tu::claw()) == Verdict::No);
    REQUIRE(brute_claw_free(tu::star(4)) == Verdict::No);
    REQUIRE(brute_claw_free(tu::complete(5)) == Verdict::Yes);
    REQUIRE(brute_claw_free(tu::cycle(8)) == Verdict::Yes);
    REQUIRE(brute_claw_free(tu::complete(17)) == Verdict::Refused);
}

TEST_CASE("block and split brutes on pinned graphs") {
    REQUIRE(brute_block(tu::path(6)) == Verdict::Yes);
    REQUIRE(brute_block(tu::complete(4)) == Verdict::Yes);
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    REQUIRE(brute_block(bowtie) == Verdict::Yes);
    REQUIRE(brute_block(tu::diamond()) == Verdict::No);
    REQUIRE(brute_block(tu::cycle(4)) == Verdict::No);
    REQUIRE(brute_block(tu::cycle(5)) == Verdict::No);

    REQUIRE(brute_split(tu::complete(3)) == Verdict::Yes);
    REQUIRE(brute_split(tu::path(4)) == Verdict::Yes);
    REQUIRE(brute_split(tu::star(4)) == Verdict::Yes);
    REQUIRE(brute_split(tu::cycle(4)) == Verdict::No);
    REQUIRE(brute_split(tu::two_k2()) == Verdict::No);
    REQUIRE(brute_split(tu::cycle(5)) == Verdict::No);
    REQUIRE(brute_split(tu::complete(17)) == Verdict::Refused);
}

TEST_CASE("bigraph convexity brutes on pinned instances") {
    // claw subdivision: the center meets all three edge vertices, so only
    // the Y side can be ordered convexly
    BipartiteGraph sc = subdivision(tu::claw());
    REQUIRE(brute_convex_side(sc, Side::Y) == Verdict::Yes);
    REQUIRE(brute_convex_side(sc, Side::X) == Verdict::No);
    REQUIRE(brute_convex(sc) == Verdict::Yes);
    REQUIRE(brute_biconvex(sc) == Verdict::No);

    REQUIRE(brute_convex(tu::even_cycle_bigraph(3)) == Verdict::No);
    REQUIRE(brute_biconvex(tu::complete_bipartite(2, 3)) == Verdict::Yes);

    // one side over the permutation cap, the other decides
    BipartiteGraph wide = tu::complete_bipartite(9, 2);
    REQUIRE(brute_convex_side(wide, Side::X) == Verdict::Refused);
    REQUIRE(brute_convex_side(wide, Side::Y) == Verdict::Yes);
    REQUIRE(brute_convex(wide) == Verdict::Yes);
    REQUIRE(brute_biconvex(wide) == Verdict::Refused);
}

TEST_CASE("star center and long hole brutes on pinned instances") {
    BipartiteGraph k23 = tu::complete_bipartite(2, 3);
    REQUIRE(brute_star_center(k23, Side::X) == Verdict::Yes);
    REQUIRE(brute_star_center(k23, Side::Y) == Verdict::Yes);
    BipartiteGraph c6 = tu::even_cycle_bigraph(3);
    REQUIRE(brute_star_center(c6, Side::X) == Verdict::No);
    REQUIRE(brute_star_center(c6, Side::Y) == Verdict::No);
    // all opposite degrees below two: nothing is constrained
    BipartiteGraph matching(2, 2, {{0, 0}, {1, 1}});
    REQUIRE(brute_star_center(matching, Side::X) == Verdict::Yes);
    REQUIRE(brute_star_center(matching, Side::Y) == Verdict::Yes);

    REQUIRE(brute_long_hole_free(c6) == Verdict::No);
    REQUIRE(brute_long_hole_free(tu::even_cycle_bigraph(4)) == Verdict::No);
    // a four-cycle is not a long hole
    REQUIRE(brute_long_hole_free(tu::even_cycle_bigraph(2)) == Verdict::Yes);
    REQUIRE(brute_long_hole_free(subdivision(tu::path(4))) == Verdict::Yes);
    REQUIRE(brute_long_hole_free(tu::complete_bipartite(8, 7)) ==
            Verdict::Refused);
}

TEST_CASE("balanced bisplit brute on pinned instances") {
    REQUIRE(brute_balanced_bisplit(tu::complete_bipartite(2, 2)) ==
            Verdict::Yes);
    REQUIRE(brute_balanced_bisplit(BipartiteGraph(1, 1, {{0, 0}})) ==
            Verdict::Yes);
    REQUIRE(brute_balanced_bisplit(
                BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 1}})) ==
            Verdict::Yes);
    // an isolated X vertex kills the matching
    REQUIRE(brute_balanced_bisplit(BipartiteGraph(2, 2, {{0, 0}})) ==
            Verdict::No);
    // sides must balance
    REQUIRE(brute_balanced_bisplit(tu::complete_bipartite(2, 3)) ==
            Verdict::No);
    REQUIRE(brute_balanced_bisplit(tu::complete_bipartite(11, 11)) ==
            Verdict::Refused);
}

TEST_CASE("star condition brutes match the constructive recognizers") {
    REQUIRE(brute_star_convex_condition(tu::claw()) == Verdict::Yes);
    REQUIRE(brute_star_convex_condition(tu::two_k2()) == Verdict::Yes);
    REQUIRE(brute_star_convex_condition(tu::cycle(4)) == Verdict::No);
    REQUIRE(brute_star_convex_condition(tu::cycle(5)) == Verdict::No);

    REQUIRE(brute_star_biconvex_condition(tu::complete(3)) == Verdict::Yes);
    REQUIRE(brute_star_biconvex_condition(tu::paw()) == Verdict::Yes);
    REQUIRE(brute_star_biconvex_condition(tu::path(4)) == Verdict::No);
    REQUIRE(brute_star_biconvex_condition(tu::two_k2()) == Verdict::No);
    REQUIRE(brute_star_biconvex_condition(tu::cycle(6)) == Verdict::No);

    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, false, [](const Graph& g) {
            REQUIRE((brute_star_convex_condition(g) == Verdict::Yes) ==
                    hs_star_convex(g).yes);
            REQUIRE((brute_star_biconvex_condition(g) == Verdict::Yes) ==
                    hs_star_biconvex(g).yes);
        });
}

TEST_CASE("edge clique cover brute produces usable blocks") {
    Graph bull(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}});
    std::vector<std::vector<int>> blocks;
    REQUIRE(brute_edge_clique_cover(bull, bull.edges(), 3, &blocks) ==
            Verdict::Yes);
    REQUIRE(blocks.size() <= 3);
    for (const auto& q : blocks)
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
                REQUIRE(bull.adjacent(q[i], q[j]));
    for (auto [a, b] : bull.edges()) {
        bool hit = false;
        for (const auto& q : blocks)
            hit = hit || (std::count(q.begin(), q.end(), a) &&
                          std::count(q.begin(), q.end(), b));
        REQUIRE(hit);
    }
    // monotone in the budget
    REQUIRE(brute_edge_clique_cover(bull, bull.edges(), 2) == Verdict::No);
    REQUIRE(brute_edge_clique_cover(bull, bull.edges(), 4) == Verdict::Yes);
    REQUIRE(brute_edge_clique_cover(bull, bull.edges(), 0) == Verdict::No);
    // empty edge set needs nothing
    blocks = {{0}};
    REQUIRE(brute_edge_clique_cover(tu::edgeless(3), {}, 1, &blocks) ==
            Verdict::Yes);
    REQUIRE(blocks.empty());
    Graph long_path = tu::path(14);
    REQUIRE(brute_edge_clique_cover(long_path, long_path.edges(), 13) ==
            Verdict::Refused);
}

TEST_CASE("root search finds or refutes pinned roots") {
    auto rs = brute_root_search(tu::complete(3), RootClass::tree);
    REQUIRE(rs.verdict == Verdict::Yes);
    REQUIRE(rs.root->nx() == 3);
    REQUIRE(rs.root->ny() == 1);
    REQUIRE(half_square(*rs.root, Side::X) == tu::complete(3));

    REQUIRE(brute_root_search(tu::claw(), RootClass::convex).verdict ==
            Verdict::Yes);
    REQUIRE(brute_root_search(tu::claw(), RootClass::biconvex).verdict ==
            Verdict::No);
    REQUIRE(brute_root_search(tu::diamond(), RootClass::tree).verdict ==
            Verdict::No);
    REQUIRE(brute_root_search(tu::cycle(4), RootClass::convex).verdict ==
            Verdict::No);
    REQUIRE(brute_root_search(tu::cycle(4), RootClass::star_convex).verdict ==
            Verdict::No);
    REQUIRE(brute_root_search(tu::two_k2(), RootClass::star_convex).verdict ==
            Verdict::Yes);
    REQUIRE(brute_root_search(tu::two_k2(), RootClass::star_biconvex).verdict ==
            Verdict::No);
    REQUIRE(
        brute_root_search(tu::path(4), RootClass::chordal_bipartite).verdict ==
        Verdict::Yes);

    // size caps only bind the clique-antichain search, not the bisplit one
    REQUIRE(brute_root_search(tu::sun3(), RootClass::convex).verdict ==
            Verdict::Refused);
    REQUIRE(brute_root_search(tu::path(5), RootClass::convex, 7).verdict ==
            Verdict::Refused);
    REQUIRE(
        brute_root_search(tu::sun3(), RootClass::balanced_bisplit).verdict ==
        Verdict::No);
}

TEST_CASE("pruned and unpruned root searches agree") {
    const RootClass tags[] = {RootClass::star_convex, RootClass::star_biconvex,
                              RootClass::convex,      RootClass::biconvex,
                              RootClass::chordal_bipartite, RootClass::tree};
    for (int n = 0; n <= 3; ++n)
        enumerate_graphs(n, false, [&](const Graph& g) {
            for (RootClass tag : tags) {
                auto fast = brute_root_search(g, tag, 4, false);
                auto slow = brute_root_search(g, tag, 4, true);
                REQUIRE(fast.verdict == slow.verdict);
            }
        });
    const Graph picks[] = {tu::claw(), tu::diamond(), tu::cycle(4), tu::paw()};
    for (const Graph& g : picks)
        for (RootClass tag : tags) {
            auto fast = brute_root_search(g, tag, 4, false);
            auto slow = brute_root_search(g, tag, 4, true);
            REQUIRE(fast.verdict == slow.verdict);
        }
}

TEST_CASE("bisplit root search matches exhaustive bigraph scan") {
    for (int n = 1; n <= 3; ++n)
        enumerate_graphs(n, false, [](const Graph& g) {
            auto rs = brute_root_search(g, RootClass::balanced_bisplit);
            REQUIRE(rs.verdict != Verdict::Refused);
            REQUIRE((rs.verdict == Verdict::Yes) == bisplit_root_exists(g));
            if (rs.verdict == Verdict::Yes) {
                REQUIRE(half_square(*rs.root, Side::X) == g);
                REQUIRE(is_balanced_bisplit(*rs.root).balanced_bisplit);
            }
        });
    const Graph picks[] = {tu::cycle(4),    tu::path(4),     tu::claw(),
                           tu::diamond(),   tu::complete(4), tu::paw(),
                           tu::two_k2(),    tu::star(3),     tu::edgeless(4)};
    for (const Graph& g : picks) {
        auto rs = brute_root_search(g, RootClass::balanced_bisplit);
        REQUIRE(rs.verdict != Verdict::Refused);
        REQUIRE((rs.verdict == Verdict::Yes) == bisplit_root_exists(g));
    }
}

TEST_CASE("random generators land in their promised classes") {
    std::mt19937_64 rng(2026);
    for (int t = 0; t < 50; ++t) {
        Graph gi = random_interval_graph(8, rng);
        REQUIRE(brute_interval(gi) == Verdict::Yes);
        Graph gu = random_unit_interval_graph(8, 20, 5, rng);
        REQUIRE(brute_unit_interval(gu) == Verdict::Yes);
        Graph gc = random_chordal_graph(10, 0.5, rng);
        REQUIRE(brute_chordal(gc) == Verdict::Yes);
        REQUIRE(components(gc).size() == 1);
    }
    // seeded determinism and density extremes
    std::mt19937_64 a(7), b(7);
    REQUIRE(random_graph(10, 0.4, a) == random_graph(10, 0.4, b));
    std::mt19937_64 c(8);
    REQUIRE(random_graph(6, 0.0, c).edge_count() == 0);
    REQUIRE(random_graph(6, 1.0, c).edge_count() == 15);
}
