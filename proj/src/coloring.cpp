#include "critwin/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "critwin/cliques.hpp"
#include "critwin/errors.hpp"

namespace critwin {

namespace {

std::vector<Vertex> by_descending_degree(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

bool extend(const Graph& g, const std::vector<Vertex>& order, std::size_t at, int k, int used, Colouring& c)
{
    if (at == order.size())
        return true;
    const Vertex v = order[at];
    // Colours above `used` are interchangeable, so only one fresh colour is tried.
    const int limit = std::min(k, used + 1);
    for (int colour = 0; colour < limit; ++colour) {
        bool clash = false;
        for (Vertex u : g.neighbors(v))
            if (c[static_cast<std::size_t>(u)] == colour) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        c[static_cast<std::size_t>(v)] = colour;
        if (extend(g, order, at + 1, k, std::max(used, colour + 1), c))
            return true;
        c[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

} // namespace

Colouring greedy_colouring(const Graph& g)
{
    Colouring c(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : by_descending_degree(g)) {
        std::vector<bool> taken(static_cast<std::size_t>(g.degree(v)) + 1, false);
        for (Vertex u : g.neighbors(v)) {
            int cu = c[static_cast<std::size_t>(u)];
            if (cu >= 0 && cu < static_cast<int>(taken.size()))
                taken[static_cast<std::size_t>(cu)] = true;
        }
        int colour = 0;
        while (taken[static_cast<std::size_t>(colour)])
            ++colour;
        c[static_cast<std::size_t>(v)] = colour;
    }
    return c;
}

int colour_count(const Colouring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool is_proper_colouring(const Graph& g, const Colouring& c)
{
    if (static_cast<int>(c.size()) != g.order())
        return false;
    for (auto colour : c)
        if (colour < 0)
            return false;
    for (auto [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)])
            return false;
    return true;
}

std::optional<Colouring> find_colouring(const Graph& g, int k)
{
    Colouring c(static_cast<std::size_t>(g.order()), -1);
    if (g.order() == 0)
        return c;
    if (k <= 0)
        return std::nullopt;
    if (extend(g, by_descending_degree(g), 0, k, 0, c))
        return c;
    return std::nullopt;
}

int chromatic_number(const Graph& g, ChromaticOptions options)
{
    if (g.order() > options.max_order)
        throw SearchLimitExceeded("chromatic_number: n=" + std::to_string(g.order()) + " exceeds cap " +
                                  std::to_string(options.max_order));
    if (g.order() == 0)
        return 0;
    const int lower = clique_number(g);
    const int upper = colour_count(greedy_colouring(g));
    for (int k = lower; k < upper; ++k)
        if (find_colouring(g, k))
            return k;
    return upper;
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                auto& su = side[static_cast<std::size_t>(u)];
                if (su < 0) {
                    su = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (su == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace critwin
