#include "critwin/independence.hpp"

#include <stdexcept>
#include <string>

#include "critwin/cliques.hpp"
#include "critwin/errors.hpp"

namespace critwin {

namespace {

void grow(const Graph& g, int p, Vertex v, VertexSet& chosen, int size, int& best)
{
    if (size > best)
        best = size;
    if (v == g.order() || size + (g.order() - v) <= best)
        return;
    // v joins only if it closes no K_p with what is already chosen.
    if (!has_clique(g, chosen & g.neighbors(v), p - 1)) {
        chosen.insert(v);
        grow(g, p, v + 1, chosen, size + 1, best);
        chosen.erase(v);
    }
    grow(g, p, v + 1, chosen, size, best);
}

} // namespace

int kp_independence(const Graph& g, int p, int max_order)
{
    if (p < 2)
        throw std::invalid_argument("kp_independence needs p >= 2");
    if (g.order() > max_order)
        throw SearchLimitExceeded("kp_independence: n=" + std::to_string(g.order()) + " exceeds cap " +
                                  std::to_string(max_order));
    VertexSet chosen(g.order());
    int best = 0;
    grow(g, p, 0, chosen, 0, best);
    return best;
}

} // namespace critwin
