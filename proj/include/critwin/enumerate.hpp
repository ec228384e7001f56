#pragma once

#include <cstdint>
#include <ranges>

#include "critwin/graph.hpp"

namespace critwin {

inline constexpr int labeled_enumeration_cap = 7;

// 2^(n choose 2).
std::uint64_t labeled_graph_count(int n);

// Bit k of index decides the k-th pair in graph6 column order
// (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(int n, std::uint64_t index);

// Every labelled graph on n vertices exactly once, by index. Throws
// SearchLimitExceeded for n above the cap.
inline auto enumerate_labeled_graphs(int n)
{
    const std::uint64_t count = labeled_graph_count(n);
    return std::views::iota(std::uint64_t{0}, count) |
           std::views::transform([n](std::uint64_t index) { return labeled_graph(n, index); });
}

} // namespace critwin
