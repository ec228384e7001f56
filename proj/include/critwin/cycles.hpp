#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

// Shortest cycle length; nullopt when g is a forest.
std::optional<int> girth(const Graph& g);
bool is_forest(const Graph& g);

// A simple cycle listed from its smallest vertex, in the direction whose
// second vertex is smaller than its last.
using Cycle = std::vector<Vertex>;

struct CycleOptions {
    std::int64_t max_cycles = 1'000'000;
};

// Every simple cycle exactly once. Throws SearchLimitExceeded past max_cycles.
std::vector<Cycle> simple_cycles(const Graph& g, CycleOptions options = {});
std::vector<Cycle> odd_cycles(const Graph& g, CycleOptions options = {});

VertexSet cycle_vertices(int universe, const Cycle& c);

} // namespace critwin
