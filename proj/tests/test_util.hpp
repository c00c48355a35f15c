#pragma once

// Shared fixtures: small named graphs, subset scans, and induced-structure
// validators used to check that emitted witnesses are genuine.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "hsq/graph.hpp"

namespace tu {

using hsq::Edge;
using hsq::Graph;
using hsq::BipartiteGraph;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph edgeless(int n) { return Graph(n, {}); }

// Star K_{1,k}: center 0.
inline Graph star(int k) {
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, std::move(e));
}

inline Graph claw() { return star(3); }

// K4 minus the edge {0,3}.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Triangle plus a pendant.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

// 3-sun: triangle {0,1,2}; 3 adj {0,1}, 4 adj {1,2}, 5 adj {2,0}.
inline Graph sun3() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

inline BipartiteGraph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, j);
    return BipartiteGraph(a, b, std::move(e));
}

// Even cycle C_{2k} as a bigraph: x_i ~ y_i, y_{i-1}.
inline BipartiteGraph even_cycle_bigraph(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, i);
        e.emplace_back(i, (i + k - 1) % k);
    }
    return BipartiteGraph(k, k, std::move(e));
}

// Disjoint union with vertices of b shifted.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), std::move(e));
}

// ---- validators -----------------------------------------------------------

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_stable(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// Witness order: the list is the cycle in order.
inline bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k < 4) return false;
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

// Witness order: center first, then the three leaves.
inline bool is_induced_claw(const Graph& g, const std::vector<int>& w) {
    if (w.size() != 4) return false;
    return g.adjacent(w[0], w[1]) && g.adjacent(w[0], w[2]) && g.adjacent(w[0], w[3]) &&
           !g.adjacent(w[1], w[2]) && !g.adjacent(w[1], w[3]) && !g.adjacent(w[2], w[3]);
}

// Witness order: the two nonadjacent vertices last: {b, c, a, d} with a,d
// nonadjacent, everything else adjacent.
inline bool is_induced_diamond(const Graph& g, const std::vector<int>& w) {
    if (w.size() != 4) return false;
    int b = w[0], c = w[1], a = w[2], d = w[3];
    return g.adjacent(b, c) && g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(d, b) &&
           g.adjacent(d, c) && !g.adjacent(a, d);
}

// Witness order: t_0..t_{k-1} then s_0..s_{k-1} with s_i ~ t_i, t_{i+1}.
inline bool is_induced_sun(const Graph& g, const std::vector<int>& w) {
    if (w.size() < 6 || w.size() % 2 != 0) return false;
    const int k = static_cast<int>(w.size()) / 2;
    std::vector<int> t(w.begin(), w.begin() + k), s(w.begin() + k, w.end());
    if (!is_clique(g, t) || !is_stable(g, s)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool want = (j == i) || (j == (i + 1) % k);
            if (g.adjacent(s[i], t[j]) != want) return false;
        }
    return true;
}

// 2K2 / C4 / C5 listed in witness order.
inline bool is_split_obstruction(const Graph& g, const std::vector<int>& w) {
    if (w.size() == 4) {
        // 2K2: {a,b,c,d} with ab, cd only.
        bool two_k2 = g.adjacent(w[0], w[1]) && g.adjacent(w[2], w[3]) &&
                      !g.adjacent(w[0], w[2]) && !g.adjacent(w[0], w[3]) &&
                      !g.adjacent(w[1], w[2]) && !g.adjacent(w[1], w[3]);
        return two_k2 || is_induced_cycle(g, w);
    }
    if (w.size() == 5) return is_induced_cycle(g, w);
    return false;
}

// All k-subsets of 0..n-1, ascending.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) { f(idx); return; }
        for (int v = start; v < n; ++v) {
            idx[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

} // namespace tu
