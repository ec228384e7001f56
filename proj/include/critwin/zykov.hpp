#pragma once

#include <functional>
#include <vector>

#include "critwin/graph.hpp"

namespace critwin {

// i precedes j when d(i) < d(j), ties broken by the smaller label.
bool precedes(const Graph& g, Vertex i, Vertex j);

// Vertices sorted increasingly under precedes().
std::vector<Vertex> vertex_order(const Graph& g);

// u becomes a twin of v: every edge at u is dropped and u is joined to
// N(v). Throws std::invalid_argument if u == v or u ~ v.
Graph zykov_step(const Graph& g, Vertex u, Vertex v);

struct TwinClass {
    Vertex index; // smallest member
    VertexSet members;
};

// Classes of a under equal neighbourhoods, ordered by index.
std::vector<TwinClass> twin_classes(const Graph& g, const VertexSet& a);

// Which degrees decide the merge direction. `current` reads the degree of
// each class's index vertex in the partially symmetrized graph; `frozen`
// uses the degrees of the input graph throughout.
enum class DegreeMode { current, frozen };

struct Symmetrization {
    Graph graph;
    int merges = 0;
    std::vector<TwinClass> classes; // final classes of A
};

// Z(G|A): repeatedly take the non-adjacent class pair (k, j), k < j, with
// the least k + j (then least k) and merge the earlier one under the order
// into the later one. Stops when all classes are pairwise complete.
Symmetrization symmetrize_traced(const Graph& g, const VertexSet& a, DegreeMode mode = DegreeMode::current);
Graph symmetrize(const Graph& g, const VertexSet& a, DegreeMode mode = DegreeMode::current);

// No r-clique with exactly one vertex in x and r-1 in y. Throws
// std::invalid_argument if x and y overlap.
bool is_xyr_free(const Graph& g, const VertexSet& x, const VertexSet& y, int r);

} // namespace critwin
