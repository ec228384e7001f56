#include "critwin/zykov.hpp"

#include <algorithm>
#include <stdexcept>

#include "critwin/cliques.hpp"

namespace critwin {

namespace {

bool degree_precedes(const std::vector<int>& deg, Vertex i, Vertex j)
{
    const int di = deg[static_cast<std::size_t>(i)], dj = deg[static_cast<std::size_t>(j)];
    return di < dj || (di == dj && i < j);
}

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    return deg;
}

// Rewire every member of `moved` to the neighbourhood of `model`. The two
// are non-adjacent, so N(model) is untouched by the isolation.
void make_twins(Graph& g, const VertexSet& moved, Vertex model)
{
    const VertexSet target = g.neighbors(model);
    for (Vertex w : moved) {
        g.isolate(w);
        for (Vertex t : target)
            g.add_edge(w, t);
    }
}

} // namespace

bool precedes(const Graph& g, Vertex i, Vertex j)
{
    const int di = g.degree(i), dj = g.degree(j);
    return di < dj || (di == dj && i < j);
}

std::vector<Vertex> vertex_order(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return precedes(g, a, b); });
    return order;
}

Graph zykov_step(const Graph& g, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::out_of_range("zykov_step: vertex out of range");
    if (u == v)
        throw std::invalid_argument("zykov_step: u == v");
    if (g.adjacent(u, v))
        throw std::invalid_argument("zykov_step: u and v are adjacent");
    Graph z = g;
    make_twins(z, VertexSet(g.order(), {u}), v);
    return z;
}

std::vector<TwinClass> twin_classes(const Graph& g, const VertexSet& a)
{
    if (a.universe() != g.order())
        throw std::invalid_argument("twin_classes: vertex set universe differs from graph order");
    std::vector<TwinClass> classes;
    for (Vertex v : a) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const TwinClass& c) { return g.neighbors(c.index) == g.neighbors(v); });
        if (it == classes.end())
            classes.push_back({v, VertexSet(g.order(), {v})});
        else
            it->members.insert(v);
    }
    return classes;
}

Symmetrization symmetrize_traced(const Graph& g, const VertexSet& a, DegreeMode mode)
{
    Symmetrization out{g, 0, twin_classes(g, a)};
    const std::vector<int> initial = degrees(g);
    auto& classes = out.classes;
    Graph& z = out.graph;

    while (true) {
        // classes are kept sorted by index, so scanning k then j visits
        // pairs with k < j; ties on k + j go to the smaller k.
        std::size_t bk = 0, bj = 0;
        int best = -1;
        for (std::size_t p = 0; p < classes.size(); ++p)
            for (std::size_t q = p + 1; q < classes.size(); ++q) {
                const Vertex k = classes[p].index, j = classes[q].index;
                if (z.adjacent(k, j))
                    continue;
                if (best < 0 || k + j < best) {
                    best = k + j;
                    bk = p;
                    bj = q;
                }
            }
        if (best < 0)
            break;

        const Vertex k = classes[bk].index, j = classes[bj].index;
        const bool j_first = mode == DegreeMode::current ? precedes(z, j, k) : degree_precedes(initial, j, k);
        if (j_first)
            make_twins(z, classes[bj].members, k);
        else
            make_twins(z, classes[bk].members, j);
        // merged class keeps the smaller index, k
        classes[bk].members |= classes[bj].members;
        classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(bj));
        ++out.merges;
    }
    return out;
}

Graph symmetrize(const Graph& g, const VertexSet& a, DegreeMode mode)
{
    return symmetrize_traced(g, a, mode).graph;
}

bool is_xyr_free(const Graph& g, const VertexSet& x, const VertexSet& y, int r)
{
    if (x.intersects(y))
        throw std::invalid_argument("is_xyr_free: X and Y overlap");
    if (r < 1)
        throw std::invalid_argument("is_xyr_free: r must be positive");
    for (Vertex v : x)
        if (has_clique(g, g.neighbors(v) & y, r - 1))
            return false;
    return true;
}

} // namespace critwin
