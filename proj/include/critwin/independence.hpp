#pragma once

#include "critwin/graph.hpp"

namespace critwin {

// alpha_p(G): the largest |S| such that G[S] contains no K_p. alpha_2 is
// the ordinary independence number. Branch and bound, capped at n <= 20.
int kp_independence(const Graph& g, int p, int max_order = 20);

inline int independence_number(const Graph& g) { return kp_independence(g, 2); }

} // namespace critwin
