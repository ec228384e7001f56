#include "critwin/cycles.hpp"

#include <limits>
#include <string>

#include "critwin/errors.hpp"

namespace critwin {

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            const int dv = dist[static_cast<std::size_t>(v)];
            if (2 * dv >= best)
                break;
            for (Vertex u : g.neighbors(v)) {
                const int du = dist[static_cast<std::size_t>(u)];
                if (du < 0) {
                    dist[static_cast<std::size_t>(u)] = dv + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    queue.push_back(u);
                } else if (parent[static_cast<std::size_t>(v)] != u) {
                    best = std::min(best, dv + du + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

bool is_forest(const Graph& g)
{
    // A forest has exactly n - (number of components) edges.
    const int n = g.order();
    VertexSet seen(n);
    int components = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen.contains(s))
            continue;
        ++components;
        seen.insert(s);
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v) - seen) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return g.edge_count() == n - components;
}

namespace {

class CycleWalker {
public:
    CycleWalker(const Graph& g, std::int64_t cap, std::vector<Cycle>& out) : g_(g), cap_(cap), out_(out) {}

    void from(Vertex start)
    {
        start_ = start;
        path_.assign(1, start);
        VertexSet allowed = g_.vertices();
        for (Vertex v = 0; v <= start; ++v)
            allowed.erase(v);
        walk(start, allowed);
    }

private:
    void walk(Vertex v, VertexSet allowed)
    {
        if (path_.size() >= 3 && g_.adjacent(v, start_) && path_[1] < path_.back()) {
            if (static_cast<std::int64_t>(out_.size()) >= cap_)
                throw SearchLimitExceeded("cycle enumeration exceeded " + std::to_string(cap_) + " cycles");
            out_.push_back(path_);
        }
        VertexSet step = allowed & g_.neighbors(v);
        for (Vertex u : step) {
            allowed.erase(u);
            path_.push_back(u);
            walk(u, allowed);
            path_.pop_back();
            allowed.insert(u);
        }
    }

    const Graph& g_;
    std::int64_t cap_;
    std::vector<Cycle>& out_;
    Vertex start_ = 0;
    Cycle path_;
};

} // namespace

std::vector<Cycle> simple_cycles(const Graph& g, CycleOptions options)
{
    std::vector<Cycle> out;
    CycleWalker walker(g, options.max_cycles, out);
    for (Vertex s = 0; s < g.order(); ++s)
        walker.from(s);
    return out;
}

std::vector<Cycle> odd_cycles(const Graph& g, CycleOptions options)
{
    std::vector<Cycle> out;
    for (auto& c : simple_cycles(g, options))
        if (c.size() % 2 == 1)
            out.push_back(std::move(c));
    return out;
}

VertexSet cycle_vertices(int universe, const Cycle& c)
{
    return VertexSet::from_range(universe, c);
}

} // namespace critwin
