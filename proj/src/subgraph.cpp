#include "critwin/subgraph.hpp"

#include <algorithm>
#include <string>

#include "critwin/errors.hpp"

namespace critwin {

namespace {

// Pattern vertices ordered so that each one (after the first of its
// component) has a mapped neighbour as early as possible.
std::vector<Vertex> search_order(const Graph& p)
{
    std::vector<Vertex> order;
    VertexSet placed(p.order());
    std::vector<int> links(static_cast<std::size_t>(p.order()), 0);
    while (static_cast<int>(order.size()) < p.order()) {
        Vertex pick = -1;
        for (Vertex v = 0; v < p.order(); ++v) {
            if (placed.contains(v))
                continue;
            if (pick < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(pick)] ||
                (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(pick)] &&
                 p.degree(v) > p.degree(pick)))
                pick = v;
        }
        placed.insert(pick);
        order.push_back(pick);
        for (Vertex u : p.neighbors(pick))
            ++links[static_cast<std::size_t>(u)];
    }
    return order;
}

class Embedder {
public:
    Embedder(const Graph& p, const Graph& h, std::int64_t limit)
        : p_(p), h_(h), limit_(limit), order_(search_order(p)), map_(static_cast<std::size_t>(p.order()), -1),
          used_(h.order())
    {
    }

    bool run() { return place(0); }
    const std::vector<Vertex>& mapping() const { return map_; }

private:
    bool place(std::size_t at)
    {
        if (at == order_.size())
            return true;
        if (limit_ > 0 && ++nodes_ > limit_)
            throw SearchLimitExceeded("subgraph search exceeded " + std::to_string(limit_) + " nodes");
        const Vertex v = order_[at];
        VertexSet candidates = h_.vertices() - used_;
        for (Vertex u : p_.neighbors(v))
            if (Vertex image = map_[static_cast<std::size_t>(u)]; image >= 0)
                candidates &= h_.neighbors(image);
        const int need = p_.degree(v);
        for (Vertex w : candidates) {
            if (h_.degree(w) < need)
                continue;
            map_[static_cast<std::size_t>(v)] = w;
            used_.insert(w);
            if (place(at + 1))
                return true;
            used_.erase(w);
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    std::int64_t limit_;
    std::int64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    VertexSet used_;
};

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& pattern, const Graph& host, SubgraphOptions options)
{
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    Embedder search(pattern, host, options.node_limit);
    if (!search.run())
        return std::nullopt;
    return search.mapping();
}

bool contains_subgraph(const Graph& pattern, const Graph& host, SubgraphOptions options)
{
    return find_subgraph(pattern, host, options).has_value();
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count() || degree_sequence(a) != degree_sequence(b))
        return false;
    // A bijection carrying every edge of a onto an edge of b is an
    // isomorphism once the edge counts agree.
    return contains_subgraph(a, b, {.node_limit = 0});
}

} // namespace critwin
