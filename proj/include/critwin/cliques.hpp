#pragma once

#include <cstdint>

#include "critwin/graph.hpp"

namespace critwin {

// Exact branch-and-bound over adjacency bitsets with a greedy-colouring
// bound. node_limit = 0 means unbounded; otherwise SearchLimitExceeded is
// thrown once that many search nodes have been expanded.
struct CliqueOptions {
    std::int64_t node_limit = 0;
};

VertexSet maximum_clique(const Graph& g, const VertexSet& within, CliqueOptions options = {});
VertexSet maximum_clique(const Graph& g, CliqueOptions options = {});

int clique_number(const Graph& g, CliqueOptions options = {});
int clique_number(const Graph& g, const VertexSet& within, CliqueOptions options = {});

bool has_clique(const Graph& g, int k, CliqueOptions options = {});
bool has_clique(const Graph& g, const VertexSet& within, int k, CliqueOptions options = {});

// Number of k-vertex subsets inducing a complete graph.
std::int64_t count_cliques(const Graph& g, int k);

bool is_clique(const Graph& g, const VertexSet& s);

} // namespace critwin
