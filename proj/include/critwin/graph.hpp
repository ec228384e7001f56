#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critwin/vertex_set.hpp"

namespace critwin {

using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on {0, ..., n-1} stored as adjacency bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(rows_.size()); }
    std::int64_t edge_count() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return rows_[static_cast<std::size_t>(v)].size(); }
    int min_degree() const;
    int max_degree() const;
    VertexSet vertices() const { return VertexSet::full(order()); }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Throw std::out_of_range / std::invalid_argument on bad endpoints or loops.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    // Removes every edge at v.
    void isolate(Vertex v);

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    void check_pair(Vertex u, Vertex v) const;

    std::vector<VertexSet> rows_;
    std::int64_t edges_ = 0;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);
Graph graph_from_edges(int n, std::initializer_list<Edge> edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph grotzsch_graph();

// Part sizes of T_r(n): n split into r parts differing by at most one,
// larger parts first.
std::vector<int> turan_part_sizes(int r, int n);
Graph turan_graph(int r, int n);
std::int64_t turan_edge_count(int r, int n);

Graph complete_multipartite(std::span<const int> part_sizes);

// Disjoint union plus every edge between the copies; H is relabelled
// to |G|, ..., |G|+|H|-1.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// Subgraph induced by s, relabelled 0..|s|-1 keeping relative order.
Graph induced(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
std::int64_t edges_within(const Graph& g, const VertexSet& s);
std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// "K3", "C5", "P4", "K2,3", "empty(4)" for recognisable shapes, otherwise
// "G(n=.., e=..)".
std::string describe(const Graph& g);

// Named disjoint vertex subsets of one graph.
class RolePartition {
public:
    RolePartition() = default;
    explicit RolePartition(int n) : n_(n) {}

    int universe() const { return n_; }
    // Throws if members leave the universe, overlap an existing role, or
    // the role name is already taken.
    void assign(std::string role, VertexSet members);
    bool has(std::string_view role) const;
    const VertexSet& get(std::string_view role) const;
    const std::vector<std::pair<std::string, VertexSet>>& roles() const { return roles_; }
    VertexSet covered() const;

private:
    int n_ = 0;
    std::vector<std::pair<std::string, VertexSet>> roles_;
};

} // namespace critwin
