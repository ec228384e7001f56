#include "critwin/cliques.hpp"

#include <string>

#include "critwin/errors.hpp"

namespace critwin {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int floor, int stop_at, std::int64_t node_limit)
        : g_(g), best_size_(floor), stop_at_(stop_at), node_limit_(node_limit)
    {
    }

    void run(const VertexSet& candidates)
    {
        VertexSet current(g_.order());
        expand(current, 0, candidates);
    }

    int best_size() const { return best_size_; }
    const VertexSet& best() const { return best_; }
    bool found() const { return found_; }

private:
    // Greedy sequential colouring of p; vertices come out in
    // nondecreasing colour order.
    void colour(const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& colours) const
    {
        VertexSet uncoloured = p;
        int k = 0;
        while (!uncoloured.empty()) {
            ++k;
            VertexSet q = uncoloured;
            for (Vertex v = q.first(); v != -1; v = q.next(v)) {
                uncoloured.erase(v);
                q -= g_.neighbors(v);
                order.push_back(v);
                colours.push_back(k);
            }
        }
    }

    bool expand(VertexSet& current, int size, VertexSet p)
    {
        if (node_limit_ > 0 && ++nodes_ > node_limit_)
            throw SearchLimitExceeded("clique search exceeded " + std::to_string(node_limit_) + " nodes");
        std::vector<Vertex> order;
        std::vector<int> colours;
        order.reserve(static_cast<std::size_t>(p.size()));
        colours.reserve(order.capacity());
        colour(p, order, colours);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + colours[i] <= best_size_)
                return false;
            Vertex v = order[i];
            current.insert(v);
            VertexSet next = p & g_.neighbors(v);
            if (next.empty()) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = current;
                    found_ = true;
                    if (stop_at_ > 0 && best_size_ >= stop_at_)
                        return true;
                }
            } else if (expand(current, size + 1, next)) {
                return true;
            }
            current.erase(v);
            p.erase(v);
        }
        return false;
    }

    const Graph& g_;
    int best_size_;
    int stop_at_;
    std::int64_t node_limit_;
    std::int64_t nodes_ = 0;
    VertexSet best_;
    bool found_ = false;
};

std::int64_t count_from(const Graph& g, const VertexSet& p, int remaining)
{
    if (remaining == 0)
        return 1;
    if (p.size() < remaining)
        return 0;
    if (remaining == 1)
        return p.size();
    std::int64_t total = 0;
    VertexSet rest = p;
    for (Vertex v : p) {
        rest.erase(v);
        total += count_from(g, rest & g.neighbors(v), remaining - 1);
    }
    return total;
}

} // namespace

VertexSet maximum_clique(const Graph& g, const VertexSet& within, CliqueOptions options)
{
    CliqueSearch search(g, 0, 0, options.node_limit);
    search.run(within);
    return search.found() ? search.best() : VertexSet(g.order());
}

VertexSet maximum_clique(const Graph& g, CliqueOptions options)
{
    return maximum_clique(g, g.vertices(), options);
}

int clique_number(const Graph& g, const VertexSet& within, CliqueOptions options)
{
    CliqueSearch search(g, 0, 0, options.node_limit);
    search.run(within);
    return search.best_size();
}

int clique_number(const Graph& g, CliqueOptions options)
{
    return clique_number(g, g.vertices(), options);
}

bool has_clique(const Graph& g, const VertexSet& within, int k, CliqueOptions options)
{
    if (k <= 0)
        return true;
    CliqueSearch search(g, k - 1, k, options.node_limit);
    search.run(within);
    return search.found();
}

bool has_clique(const Graph& g, int k, CliqueOptions options)
{
    return has_clique(g, g.vertices(), k, options);
}

std::int64_t count_cliques(const Graph& g, int k)
{
    if (k < 0)
        return 0;
    return count_from(g, g.vertices(), k);
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (!(s - VertexSet(s.universe(), {v})).is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

} // namespace critwin
