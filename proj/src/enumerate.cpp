#include "critwin/enumerate.hpp"

#include <stdexcept>
#include <string>

#include "critwin/errors.hpp"

namespace critwin {

std::uint64_t labeled_graph_count(int n)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    if (n > labeled_enumeration_cap)
        throw SearchLimitExceeded("labelled enumeration capped at n=" + std::to_string(labeled_enumeration_cap));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t index)
{
    Graph g(n);
    int k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((index >> k) & 1U)
                g.add_edge(i, j);
    return g;
}

} // namespace critwin
