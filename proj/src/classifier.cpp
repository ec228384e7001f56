#include "critwin/classifier.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "critwin/cycles.hpp"
#include "critwin/errors.hpp"
#include "critwin/subgraph.hpp"

namespace critwin {

namespace {

void check_order(const Graph& h, const ClassifierOptions& options)
{
    if (h.order() > options.max_order || h.order() > 64)
        throw SearchLimitExceeded("classifier capped at " + std::to_string(options.max_order) + " vertices");
}

int checked_chromatic(const Graph& h, const ClassifierOptions& options)
{
    check_order(h, options);
    return chromatic_number(h, {.max_order = options.max_order});
}

std::string set_text(const VertexSet& s)
{
    std::string out = "{";
    for (Vertex v : s) {
        if (out.size() > 1)
            out += ',';
        out += std::to_string(v);
    }
    return out + "}";
}

// Search state shared by the near-acyclic and r-near-acyclic searches.
class NearAcyclicSearch {
public:
    NearAcyclicSearch(const Graph& h, const ClassifierOptions& options) : h_(h), n_(h.order())
    {
        for (const auto& c : odd_cycles(h, {.max_cycles = options.max_cycles}))
            odd_.push_back(cycle_vertices(n_, c).mask());
        if (options.seed)
            rng_.emplace(*options.seed);
    }

    // Near-acyclic witness for H[alive], if any.
    std::optional<NearAcyclicWitness> remainder(std::uint64_t alive)
    {
        if (auto it = done_.find(alive); it != done_.end() && !it->second)
            return std::nullopt;
        std::vector<std::uint64_t> odd_here;
        for (auto c : odd_)
            if ((c & ~alive) == 0)
                odd_here.push_back(c);
        for (std::uint64_t s : independent_subsets(alive)) {
            const bool meets_twice = std::all_of(odd_here.begin(), odd_here.end(),
                                                 [&](std::uint64_t c) { return std::popcount(c & s) >= 2; });
            if (!meets_twice)
                continue;
            auto rest = VertexSet::from_mask(n_, alive & ~s);
            if (is_forest(induced(h_, rest))) {
                done_[alive] = true;
                return NearAcyclicWitness{{}, VertexSet::from_mask(n_, s), rest};
            }
        }
        done_[alive] = false;
        return std::nullopt;
    }

    std::optional<NearAcyclicWitness> with_deletions(std::uint64_t alive, int left)
    {
        if (left == 0)
            return remainder(alive);
        if (!visited_.insert({left, alive}).second)
            return std::nullopt;
        for (std::uint64_t d : independent_subsets(alive))
            if (auto w = with_deletions(alive & ~d, left - 1)) {
                w->deletions.insert(w->deletions.begin(), VertexSet::from_mask(n_, d));
                return w;
            }
        return std::nullopt;
    }

    std::uint64_t all() const { return VertexSet::full(n_).mask(); }

private:
    std::vector<std::uint64_t> independent_subsets(std::uint64_t alive)
    {
        std::vector<std::uint64_t> out;
        // submasks in increasing numeric order, empty set first
        std::uint64_t s = 0;
        while (true) {
            bool ok = true;
            for (std::uint64_t rest = s; rest && ok; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                ok = (h_.neighbors(v).mask() & s) == 0;
            }
            if (ok)
                out.push_back(s);
            if (s == alive)
                break;
            s = (s - alive) & alive;
        }
        if (rng_)
            std::shuffle(out.begin(), out.end(), *rng_);
        return out;
    }

    const Graph& h_;
    int n_;
    std::vector<std::uint64_t> odd_;
    std::unordered_map<std::uint64_t, bool> done_;
    std::set<std::pair<int, std::uint64_t>> visited_;
    std::optional<std::mt19937_64> rng_;
};

void colour_from(const Graph& h, int k, Vertex v, int used, Colouring& c, std::vector<Colouring>& out)
{
    if (v == h.order()) {
        out.push_back(c);
        return;
    }
    // colours still unused must fit in the remaining vertices
    if (k - used > h.order() - v)
        return;
    for (int colour = 0; colour < std::min(k, used + 1); ++colour) {
        bool clash = false;
        for (Vertex u : h.neighbors(v))
            if (u < v && c[static_cast<std::size_t>(u)] == colour) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        c[static_cast<std::size_t>(v)] = colour;
        colour_from(h, k, v + 1, std::max(used, colour + 1), c, out);
    }
    c[static_cast<std::size_t>(v)] = -1;
}

VertexSet colour_class(const Colouring& c, int colour)
{
    VertexSet s(static_cast<int>(c.size()));
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] == colour)
            s.insert(static_cast<Vertex>(v));
    return s;
}

bool near_witness_holds(const Graph& h, const NearAcyclicWitness& w, int r, const ClassifierOptions& options)
{
    const int n = h.order();
    if (static_cast<int>(w.deletions.size()) != r - 3)
        return false;
    VertexSet alive = h.vertices();
    for (const auto& d : w.deletions) {
        if (d.universe() != n || !d.is_subset_of(alive) || !is_independent(h, d))
            return false;
        alive -= d;
    }
    if (!w.independent.is_subset_of(alive) || w.forest != alive - w.independent)
        return false;
    if (!is_independent(h, w.independent) || !is_forest(induced(h, w.forest)))
        return false;
    // odd cycles of the remaining graph, enumerated afresh in its own labels
    const auto keep = alive.to_vector();
    for (const auto& c : odd_cycles(induced(h, alive), {.max_cycles = options.max_cycles})) {
        int hits = 0;
        for (Vertex v : c)
            hits += w.independent.contains(keep[static_cast<std::size_t>(v)]);
        if (hits < 2)
            return false;
    }
    return true;
}

} // namespace

std::vector<Colouring> proper_colourings(const Graph& h, int k)
{
    std::vector<Colouring> out;
    if (k < 0)
        return out;
    Colouring c(static_cast<std::size_t>(h.order()), -1);
    colour_from(h, k, 0, 0, c, out);
    return out;
}

std::vector<FamilyMember> decomposition_family(const Graph& h, ClassifierOptions options)
{
    const int r = checked_chromatic(h, options);
    if (r < 3)
        throw std::invalid_argument("decomposition family needs chromatic number at least 3");
    std::vector<FamilyMember> family;
    for (auto& c : proper_colourings(h, r))
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                auto kept = colour_class(c, a) | colour_class(c, b);
                auto g = induced(h, kept);
                const bool seen = std::any_of(family.begin(), family.end(),
                                              [&](const FamilyMember& m) { return is_isomorphic(m.graph, g); });
                if (!seen)
                    family.push_back({c, a, b, kept, std::move(g)});
            }
    return family;
}

std::optional<NearAcyclicWitness> near_acyclic_witness(const Graph& h, ClassifierOptions options)
{
    if (checked_chromatic(h, options) != 3)
        throw std::invalid_argument("near-acyclicity is defined for 3-chromatic graphs");
    NearAcyclicSearch search(h, options);
    return search.remainder(search.all());
}

bool is_near_acyclic(const Graph& h, ClassifierOptions options)
{
    return near_acyclic_witness(h, options).has_value();
}

std::optional<NearAcyclicWitness> r_near_acyclic_witness(const Graph& h, int r, ClassifierOptions options)
{
    if (r < 3)
        throw std::invalid_argument("r-near-acyclicity needs r >= 3");
    if (checked_chromatic(h, options) != r)
        throw std::invalid_argument("graph does not have chromatic number " + std::to_string(r));
    // Removing r-3 independent sets leaves chromatic number at least 3, and
    // a forest plus an independent set is 3-colourable, so a found
    // remainder is 3-chromatic as the definition requires.
    NearAcyclicSearch search(h, options);
    return search.with_deletions(search.all(), r - 3);
}

bool is_r_near_acyclic(const Graph& h, int r, ClassifierOptions options)
{
    return r_near_acyclic_witness(h, r, options).has_value();
}

ThresholdClass chromatic_threshold(const Graph& h, ClassifierOptions options)
{
    ThresholdClass t;
    t.r = checked_chromatic(h, options);
    if (t.r < 3)
        throw std::invalid_argument("chromatic threshold classification needs chromatic number at least 3");
    const int r = t.r;
    if ((t.near_acyclic = r_near_acyclic_witness(h, r, options))) {
        t.kind = ThresholdKind::near_acyclic;
        t.value = rat(r - 3, r - 2);
        return t;
    }
    for (auto& m : decomposition_family(h, options))
        if (is_forest(m.graph)) {
            t.kind = ThresholdKind::forest_in_family;
            t.value = rat(2 * r - 5, 2 * r - 3);
            t.forest = std::move(m);
            return t;
        }
    t.kind = ThresholdKind::no_forest;
    t.value = rat(r - 2, r - 1);
    return t;
}

bool verify_witness(const Graph& h, const ThresholdClass& t, ClassifierOptions options)
{
    const int r = checked_chromatic(h, options);
    if (r != t.r || r < 3)
        return false;
    switch (t.kind) {
    case ThresholdKind::near_acyclic:
        return t.value == rat(r - 3, r - 2) && t.near_acyclic && near_witness_holds(h, *t.near_acyclic, r, options);
    case ThresholdKind::forest_in_family: {
        if (t.value != rat(2 * r - 5, 2 * r - 3) || !t.forest)
            return false;
        const auto& m = *t.forest;
        if (m.colouring.size() != static_cast<std::size_t>(h.order()) || !is_proper_colouring(h, m.colouring) ||
            colour_count(m.colouring) > r)
            return false;
        if (m.class_a == m.class_b || m.kept != (colour_class(m.colouring, m.class_a) | colour_class(m.colouring, m.class_b)))
            return false;
        return m.graph == induced(h, m.kept) && is_forest(m.graph);
    }
    case ThresholdKind::no_forest: {
        if (t.value != rat(r - 2, r - 1) || is_r_near_acyclic(h, r, options))
            return false;
        auto family = decomposition_family(h, options);
        return std::none_of(family.begin(), family.end(), [](const FamilyMember& m) { return is_forest(m.graph); });
    }
    }
    return false;
}

std::string summary(const ThresholdClass& t)
{
    std::string out = "chi=" + std::to_string(t.r) + ", delta_chi=" + to_string(t.value) + ", witness=";
    const std::string rna = std::to_string(t.r) + "-near-acyclic";
    switch (t.kind) {
    case ThresholdKind::near_acyclic: {
        const auto& w = *t.near_acyclic;
        out += t.r == 3 ? std::string("near-acyclic") : rna;
        std::string deleted;
        for (const auto& d : w.deletions)
            deleted += (deleted.empty() ? "" : " ") + set_text(d);
        if (!deleted.empty())
            out += " after deleting " + deleted;
        out += " with S=" + set_text(w.independent) + ", forest on " + set_text(w.forest);
        break;
    }
    case ThresholdKind::forest_in_family:
        out += "forest " + describe(t.forest->graph) + " in decomposition family; not " + rna;
        break;
    case ThresholdKind::no_forest:
        out += "no forest in decomposition family; not " + rna;
        break;
    }
    return out;
}

} // namespace critwin
