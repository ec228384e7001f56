#pragma once

// Brute-force reference routines used as independent oracles in tests.
// Nothing here calls the search code it is checking.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline VertexSet random_subset(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng))
            s.insert(v);
    return s;
}

inline bool mask_is_clique(const Graph& g, std::uint32_t mask)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (((mask >> u) & 1U) && ((mask >> v) & 1U) && !g.adjacent(u, v))
                return false;
    return true;
}

inline int brute_clique_number(const Graph& g)
{
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
        if (std::popcount(m) > best && mask_is_clique(g, m))
            best = std::popcount(m);
    return best;
}

inline long brute_count_cliques(const Graph& g, int k)
{
    long count = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
        if (std::popcount(m) == k && mask_is_clique(g, m))
            ++count;
    return count;
}

// Max |S| whose induced subgraph has no k-clique.
inline int brute_kp_independence(const Graph& g, int p)
{
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m) {
        if (std::popcount(m) <= best)
            continue;
        bool ok = true;
        for (std::uint32_t sub = m; ok; sub = (sub - 1) & m) {
            if (std::popcount(sub) == p && mask_is_clique(g, sub))
                ok = false;
            if (sub == 0)
                break;
        }
        if (ok)
            best = std::popcount(m);
    }
    return best;
}

// Tries every assignment of k colours.
inline bool brute_colourable(const Graph& g, int k)
{
    const int n = g.order();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) {
                proper = false;
                break;
            }
        if (proper)
            return true;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k)
            c[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return false;
    }
}

inline int brute_chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    int k = 1;
    while (!brute_colourable(g, k))
        ++k;
    return k;
}

} // namespace critwin::testing
