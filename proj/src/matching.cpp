#include "critwin/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "critwin/errors.hpp"

namespace critwin {

namespace {

void check_sides(const Graph& b, const VertexSet& x, const VertexSet& y)
{
    if (x.intersects(y))
        throw std::invalid_argument("bipartite sides overlap");
    for (auto [u, v] : b.edges()) {
        const bool across = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (!across)
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " does not run between the declared sides");
    }
}

bool augment(const Graph& b, Vertex u, const VertexSet& y, VertexSet& visited, std::vector<Vertex>& mate)
{
    for (Vertex w : b.neighbors(u) & y) {
        if (visited.contains(w))
            continue;
        visited.insert(w);
        Vertex& m = mate[static_cast<std::size_t>(w)];
        if (m < 0 || augment(b, m, y, visited, mate)) {
            m = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<Edge> maximum_matching(const Graph& b, const VertexSet& x, const VertexSet& y)
{
    check_sides(b, x, y);
    std::vector<Vertex> mate(static_cast<std::size_t>(b.order()), -1);
    for (Vertex u : x) {
        VertexSet visited(b.order());
        augment(b, u, y, visited, mate);
    }
    std::vector<Edge> out;
    for (Vertex w : y)
        if (mate[static_cast<std::size_t>(w)] >= 0)
            out.emplace_back(mate[static_cast<std::size_t>(w)], w);
    return out;
}

int matching_number(const Graph& b, const VertexSet& x, const VertexSet& y)
{
    return static_cast<int>(maximum_matching(b, x, y).size());
}

int hall_deficiency(const Graph& b, const VertexSet& x)
{
    for (Vertex u : x)
        if (b.neighbors(u).intersects(x))
            throw std::invalid_argument("hall_deficiency: edge inside the X side");
    const auto members = x.to_vector();
    if (members.size() > 20)
        throw SearchLimitExceeded("hall_deficiency: |X| exceeds 20");
    const std::size_t subsets = std::size_t{1} << members.size();
    // Neighbourhood of each subset from the one without its lowest member.
    std::vector<VertexSet> reach(subsets, VertexSet(b.order()));
    int best = 0;
    for (std::size_t s = 1; s < subsets; ++s) {
        const auto low = static_cast<std::size_t>(std::countr_zero(s));
        reach[s] = reach[s & (s - 1)] | b.neighbors(members[low]);
        best = std::max(best, std::popcount(s) - reach[s].size());
    }
    return best;
}

} // namespace critwin
