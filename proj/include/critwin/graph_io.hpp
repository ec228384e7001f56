#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// graph6, short form only (n <= 62), upper triangle in column order.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list text: "n m" then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);
// Single-line rendering "n:u-v,u-v,..." used to embed witnesses in reports.
std::string edge_string(const Graph& g);
Graph parse_edge_string(std::string_view text);

enum class GraphFormat { automatic, edge_list, graph6 };

// Reads every graph in the text. Edge-list input holds exactly one graph;
// graph6 input holds one graph per non-empty line.
std::vector<Graph> read_graphs(std::string_view text, GraphFormat format = GraphFormat::automatic);
GraphFormat detect_format(std::string_view text);

} // namespace critwin
