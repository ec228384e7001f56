#include "critwin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace critwin {

Graph::Graph(int n) : rows_(static_cast<std::size_t>(n < 0 ? 0 : n), VertexSet(n))
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
}

int Graph::min_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < order(); ++v)
        best = v == 0 ? degree(v) : std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v))
            out.emplace_back(u, v);
    return out;
}

void Graph::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                                std::to_string(order() - 1));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (adjacent(u, v))
        return;
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (!adjacent(u, v))
        return;
    rows_[static_cast<std::size_t>(u)].erase(v);
    rows_[static_cast<std::size_t>(v)].erase(u);
    --edges_;
}

void Graph::isolate(Vertex v)
{
    for (Vertex u : VertexSet(neighbors(v)))
        remove_edge(u, v);
}

Graph graph_from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph graph_from_edges(int n, std::initializer_list<Edge> edges)
{
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b)
{
    std::vector<int> parts{a, b};
    return complete_multipartite(parts);
}

Graph petersen_graph()
{
    return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                 {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph grotzsch_graph()
{
    // Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10.
    Graph g(11);
    for (Vertex v = 0; v < 5; ++v) {
        Vertex a = (v + 1) % 5, b = (v + 4) % 5;
        g.add_edge(v, a);
        g.add_edge(v + 5, a);
        g.add_edge(v + 5, b);
        g.add_edge(v + 5, 10);
    }
    return g;
}

std::vector<int> turan_part_sizes(int r, int n)
{
    if (r < 1 || n < 0)
        throw std::invalid_argument("turan graph needs r >= 1 and n >= 0");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

Graph turan_graph(int r, int n)
{
    auto sizes = turan_part_sizes(r, n);
    return complete_multipartite(sizes);
}

std::int64_t turan_edge_count(int r, int n)
{
    std::int64_t squares = 0;
    for (int s : turan_part_sizes(r, n))
        squares += std::int64_t{s} * s;
    return (std::int64_t{n} * n - squares) / 2;
}

Graph complete_multipartite(std::span<const int> part_sizes)
{
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph join(const Graph& g, const Graph& h)
{
    Graph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

Graph induced(const Graph& g, const VertexSet& s)
{
    if (s.universe() > g.order() && s.next(g.order() - 1) != -1)
        throw std::out_of_range("induced: vertex outside graph");
    std::vector<Vertex> keep = s.to_vector();
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.order())
            throw std::out_of_range("induced: vertex outside graph");
        label[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(keep.size()));
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (v > u && label[static_cast<std::size_t>(v)] >= 0)
                out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& s)
{
    return induced(g, g.vertices() - s);
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

std::int64_t edges_within(const Graph& g, const VertexSet& s)
{
    std::int64_t twice = 0;
    for (Vertex v : s)
        twice += g.neighbors(v).intersection_size(s);
    return twice / 2;
}

std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    std::int64_t count = 0;
    for (Vertex v : a)
        count += g.neighbors(v).intersection_size(b);
    return count;
}

namespace {

bool connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    VertexSet seen(g.order());
    std::vector<Vertex> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v) - seen) {
            seen.insert(u);
            stack.push_back(u);
        }
    }
    return seen.size() == g.order();
}

} // namespace

std::string describe(const Graph& g)
{
    const int n = g.order();
    const auto e = g.edge_count();
    if (e == 0)
        return n == 1 ? "K1" : "empty(" + std::to_string(n) + ")";
    if (e == std::int64_t{n} * (n - 1) / 2)
        return "K" + std::to_string(n);
    if (connected(g)) {
        if (n >= 3 && g.min_degree() == 2 && g.max_degree() == 2)
            return "C" + std::to_string(n);
        if (e == n - 1 && g.max_degree() <= 2)
            return "P" + std::to_string(n);
        if (e == n - 1 && g.max_degree() == n - 1)
            return "K1," + std::to_string(n - 1);
    }
    return "G(n=" + std::to_string(n) + ", e=" + std::to_string(e) + ")";
}

void RolePartition::assign(std::string role, VertexSet members)
{
    if (has(role))
        throw std::invalid_argument("role '" + role + "' assigned twice");
    if (members.universe() != n_) {
        if (members.universe() > n_ && members.next(n_ - 1) != -1)
            throw std::out_of_range("role '" + role + "' references a vertex >= " + std::to_string(n_));
        VertexSet resized(n_);
        for (Vertex v : members) {
            if (v >= n_)
                throw std::out_of_range("role '" + role + "' references a vertex >= " + std::to_string(n_));
            resized.insert(v);
        }
        members = resized;
    }
    for (const auto& [name, set] : roles_)
        if (set.intersects(members))
            throw std::invalid_argument("role '" + role + "' overlaps role '" + name + "'");
    roles_.emplace_back(std::move(role), std::move(members));
}

bool RolePartition::has(std::string_view role) const
{
    return std::any_of(roles_.begin(), roles_.end(), [&](const auto& r) { return r.first == role; });
}

const VertexSet& RolePartition::get(std::string_view role) const
{
    for (const auto& [name, set] : roles_)
        if (name == role)
            return set;
    throw std::out_of_range("no role named '" + std::string(role) + "'");
}

VertexSet RolePartition::covered() const
{
    VertexSet all(n_);
    for (const auto& [name, set] : roles_)
        all |= set;
    return all;
}

} // namespace critwin
