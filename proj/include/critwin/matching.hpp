#pragma once

#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

// Maximum matching of the bipartite graph b with sides x and y by
// augmenting paths. Throws std::invalid_argument when the sides overlap
// or some edge of b does not run between them.
std::vector<Edge> maximum_matching(const Graph& b, const VertexSet& x, const VertexSet& y);
int matching_number(const Graph& b, const VertexSet& x, const VertexSet& y);

// max over S subset of x of |S| - |N(S)|, the empty set giving 0. Every
// edge at x must leave x. Exhaustive over subsets, so |x| <= 20.
int hall_deficiency(const Graph& b, const VertexSet& x);

} // namespace critwin
