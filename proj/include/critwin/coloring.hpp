#pragma once

#include <optional>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

using Colouring = std::vector<int>;

struct ChromaticOptions {
    int max_order = 16;
};

// Greedy colouring in descending-degree order; colours are 0-based.
Colouring greedy_colouring(const Graph& g);
int colour_count(const Colouring& c);
bool is_proper_colouring(const Graph& g, const Colouring& c);

// A proper colouring with at most k colours, if one exists.
std::optional<Colouring> find_colouring(const Graph& g, int k);

// Exact chromatic number. Throws SearchLimitExceeded above max_order.
int chromatic_number(const Graph& g, ChromaticOptions options = {});

bool is_bipartite(const Graph& g);

} // namespace critwin
