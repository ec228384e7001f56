#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

struct SubgraphOptions {
    // Search nodes before SearchLimitExceeded; 0 means unbounded.
    std::int64_t node_limit = 50'000'000;
};

// Injective map V(pattern) -> V(host) sending edges to edges (not
// necessarily induced), or nullopt if pattern is not a subgraph of host.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& pattern, const Graph& host,
                                                 SubgraphOptions options = {});
bool contains_subgraph(const Graph& pattern, const Graph& host, SubgraphOptions options = {});

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace critwin
