#include "critwin/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "critwin/bounds.hpp"
#include "critwin/classifier.hpp"
#include "critwin/cliques.hpp"
#include "critwin/coloring.hpp"
#include "critwin/cycles.hpp"
#include "critwin/enumerate.hpp"
#include "critwin/errors.hpp"
#include "critwin/subgraph.hpp"

namespace critwin {

namespace {

int round_half_up(const Rational& q)
{
    if (q < 0)
        throw std::invalid_argument("negative part size");
    const Rational shifted = q + rat(1, 2);
    return static_cast<int>(boost::multiprecision::cpp_int(numerator(shifted) / denominator(shifted)));
}

PartSizes from_ratios(int r, int x_size, const PartRatios& p)
{
    if (x_size < 1)
        throw std::invalid_argument("|X| must be at least 1");
    PartSizes s;
    s.x = x_size;
    s.y.assign(static_cast<std::size_t>(r - 3), round_half_up(p.y * x_size));
    s.z = round_half_up(p.z * x_size);
    return s;
}

void need_r(int r, int least)
{
    if (r < least)
        throw std::invalid_argument("r must be at least " + std::to_string(least));
}

double angular_distance(double a, double b)
{
    double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
    return d > std::numbers::pi ? 2 * std::numbers::pi - d : d;
}

// Triangle-free graphs on at most 6 vertices with chromatic number 3 are
// all near-acyclic; computed rather than assumed.
bool small_triangle_free_3_chromatic_are_near_acyclic()
{
    static const bool verdict = [] {
        for (int n = 3; n <= 6; ++n)
            for (std::uint64_t i = 0; i < labeled_graph_count(n); ++i) {
                auto h = labeled_graph(n, i);
                if (has_clique(h, 3) || is_bipartite(h))
                    continue;
                if (chromatic_number(h) == 3 && !is_near_acyclic(h))
                    return false;
            }
        return true;
    }();
    return verdict;
}

std::optional<int> settle_chi(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    if (is_bipartite(g))
        return 2;
    if (find_colouring(g, 3))
        return 3;
    if (g.order() <= ChromaticOptions{}.max_order)
        return chromatic_number(g);
    return std::nullopt;
}

CoreDiagnostics diagnose(std::string name, const Graph& core, const Graph& chi_part)
{
    CoreDiagnostics d;
    d.name = std::move(name);
    d.order = core.order();
    d.edges = core.edge_count();
    d.girth = girth(core);
    d.triangle_free = !has_clique(core, 3);
    d.chi = settle_chi(chi_part);
    d.small_subgraphs_near_acyclic = d.triangle_free && small_triangle_free_3_chromatic_are_near_acyclic();
    return d;
}

// Lays out core | X | Y_1..Y_{r-3} | Z and adds the edge rules common to
// all kinds: Y complete multipartite, X-Z join, Y joined to everything
// else. The core's own edges are copied in.
Construction assemble(const Graph& core, int core_members, std::string core_role, const PartSizes& s)
{
    Construction c;
    const int n = s.total();
    c.graph = Graph(n);
    c.roles = RolePartition(n);
    for (auto [u, v] : core.edges())
        c.graph.add_edge(u, v);

    int at = 0;
    auto block = [&](int size) {
        auto b = VertexSet(n);
        for (int i = 0; i < size; ++i)
            b.insert(at++);
        return b;
    };
    const auto core_set = block(core_members);
    const auto x = block(s.x);
    std::vector<VertexSet> ys;
    for (int size : s.y)
        ys.push_back(block(size));
    const auto z = block(s.z);

    c.roles.assign(std::move(core_role), core_set);
    c.roles.assign("X", x);
    for (std::size_t i = 0; i < ys.size(); ++i)
        c.roles.assign("Y" + std::to_string(i + 1), ys[i]);
    c.roles.assign("Z", z);

    auto join_sets = [&](const VertexSet& a, const VertexSet& b) {
        for (Vertex u : a)
            for (Vertex v : b)
                c.graph.add_edge(u, v);
    };
    const auto rest = core_set | x | z;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i + 1; j < ys.size(); ++j)
            join_sets(ys[i], ys[j]);
        join_sets(ys[i], rest);
    }
    join_sets(x, z);
    return c;
}

} // namespace

std::string_view kind_name(ConstructionKind k)
{
    switch (k) {
    case ConstructionKind::bh_star:
        return "bh-star";
    case ConstructionKind::bh_star_star:
        return "bh-star-star";
    case ConstructionKind::eg:
        return "eg";
    }
    return "?";
}

ConstructionKind parse_kind(std::string_view name)
{
    for (auto k : {ConstructionKind::bh_star, ConstructionKind::bh_star_star, ConstructionKind::eg})
        if (kind_name(k) == name)
            return k;
    throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

int PartSizes::y_total() const
{
    int t = 0;
    for (int v : y)
        t += v;
    return t;
}

int PartSizes::total() const { return core + x + y_total() + z; }

PartRatios bh_star_ratios(int r, const Rational& d)
{
    need_r(r, 3);
    const Rational den = 2 * d - 2 * (r - 3) * (1 - d);
    if (den <= 0)
        throw std::invalid_argument("bh-star ratios: delta too small for r");
    PartRatios p{(1 - d) / den, (1 - 2 * d + (r - 3) * (1 - d)) / den};
    if (p.z < 0)
        throw std::invalid_argument("bh-star ratios: negative |Z|");
    return p;
}

PartRatios bh_star_star_ratios(int r, const Rational& d)
{
    need_r(r, 3);
    const Rational den = 2 * (d * (5 * r - 14) - (r - 3) * (6 * d - 1));
    if (den <= 0)
        throw std::invalid_argument("bh-star-star ratios: nonpositive denominator");
    PartRatios p{(6 * d - 1) / den, ((1 - 2 * d) * (5 * r - 14) + (r - 3) * (6 * d - 1)) / den};
    if (p.y < 0 || p.z < 0)
        throw std::invalid_argument("bh-star-star ratios: negative part");
    return p;
}

PartSizes part_sizes_bh_star(int r, const Rational& delta, int x_size)
{
    return from_ratios(r, x_size, bh_star_ratios(r, delta));
}

PartSizes part_sizes_bh_star_star(int r, const Rational& delta, int x_size)
{
    return from_ratios(r, x_size, bh_star_star_ratios(r, delta));
}

PartSizes part_sizes_eg(int r, const Rational& delta, int scale)
{
    need_r(r, 4);
    if (!f2(r, delta).in_range())
        throw std::invalid_argument("eg: delta outside [(r-3)/(r-1), (r-3)/(r-2)]");
    if (scale < 0)
        throw std::invalid_argument("eg: negative scale");
    PartSizes s;
    s.y.assign(static_cast<std::size_t>(r - 3), round_half_up(delta * scale / (r - 3)));
    s.x = s.z = round_half_up((1 - delta) * scale / 2);
    return s;
}

CircleCore borsuk_circle_core(int m, double eps, int x_count)
{
    if (m < 3 || x_count < 3)
        throw std::invalid_argument("circle core needs at least 3 points on each circle");
    if (!(eps > 0 && eps < std::numbers::pi / 3))
        throw std::invalid_argument("circle core needs 0 < eps < pi/3");
    const double pi = std::numbers::pi;
    CircleCore c{Graph(m + x_count), RolePartition(m + x_count), eps};
    std::vector<double> angle(static_cast<std::size_t>(m + x_count));
    for (int i = 0; i < m; ++i)
        angle[static_cast<std::size_t>(i)] = 2 * pi * i / m;
    for (int j = 0; j < x_count; ++j)
        angle[static_cast<std::size_t>(m + j)] = 2 * pi * (j + 0.5) / x_count;
    auto at = [&](int v) { return angle[static_cast<std::size_t>(v)]; };

    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v)
            if (angular_distance(at(u), at(v)) > pi - eps)
                c.graph.add_edge(u, v);
        for (int x = m; x < m + x_count; ++x)
            if (angular_distance(at(u), at(x)) > pi / 2 + eps / 2)
                c.graph.add_edge(u, x);
    }
    VertexSet u_set(m + x_count), x_set(m + x_count);
    for (int v = 0; v < m; ++v)
        u_set.insert(v);
    for (int v = m; v < m + x_count; ++v)
        x_set.insert(v);
    c.roles.assign("U'", u_set);
    c.roles.assign("X", x_set);

    if (has_clique(c.graph, 3))
        throw std::logic_error("circle core contains a triangle");
    if (!is_independent(c.graph, x_set))
        throw std::logic_error("circle core X is not independent");
    for (int u = 0; u < m; ++u)
        if (c.graph.neighbors(u).intersection_size(x_set) < (0.5 - eps) * x_count)
            throw std::logic_error("circle core vertex with too few X-neighbours");
    return c;
}

Graph builtin_core(std::string_view name)
{
    if (name == "c5")
        return cycle_graph(5);
    if (name == "petersen")
        return petersen_graph();
    if (name == "grotzsch")
        return grotzsch_graph();
    throw std::invalid_argument("unknown core '" + std::string(name) + "' (c5, petersen, grotzsch)");
}

ConstructionReport density_report(const Graph& g, int r, const Rational& delta, const Rational& target,
                                  DensityOptions options)
{
    ConstructionReport rep;
    rep.r = r;
    rep.delta = delta;
    rep.n = g.order();
    rep.edges = g.edge_count();
    rep.min_degree = g.order() ? g.min_degree() : 0;
    rep.density = g.order() ? static_cast<double>(rep.edges) / (static_cast<double>(rep.n) * rep.n) : 0.0;
    rep.target = target;
    rep.deviation = std::abs(rep.density - to_double(target));
    try {
        rep.clique_number = clique_number(g, {.node_limit = options.clique_node_limit});
    } catch (const SearchLimitExceeded&) {
        rep.warnings.push_back("clique search exceeded its node budget");
    }
    if (options.forbidden) {
        try {
            rep.contains_forbidden = contains_subgraph(*options.forbidden, g);
        } catch (const SearchLimitExceeded&) {
            rep.warnings.push_back("subgraph search exceeded its node budget");
        }
    }
    return rep;
}

Construction build(const ConstructionSpec& spec)
{
    const int r = spec.r;
    std::vector<std::string> warnings;
    Construction c;
    if (spec.kind == ConstructionKind::eg) {
        need_r(r, 4);
        Graph core = spec.core_graph ? *spec.core_graph : builtin_core(spec.core_name);
        const std::string name = spec.core_graph ? std::string("custom") : spec.core_name;
        if (auto g = girth(core); g && *g < 4)
            throw std::invalid_argument("eg core must have girth at least 4");
        if (core.order() * 50 > spec.n)
            warnings.push_back("core is larger than 2% of n");
        auto sizes = part_sizes_eg(r, spec.delta, spec.n - core.order());
        sizes.core = core.order();
        c = assemble(core, core.order(), "E", sizes);
        c.report = density_report(c.graph, r, spec.delta, f2(r, spec.delta).value);
        c.report.parts = sizes;
        c.report.core = diagnose(name, core, core);
    } else {
        need_r(r, 3);
        const bool star = spec.kind == ConstructionKind::bh_star;
        const auto eval = f1(r, spec.delta);
        const Regime expected = star ? Regime::upper : Regime::lower;
        if (eval.regime != expected)
            warnings.push_back(std::string(kind_name(spec.kind)) + " is meant for the " +
                               std::string(regime_name(expected)) + " regime; delta is " +
                               std::string(regime_name(eval.regime)));
        const int m = spec.core_size > 0 ? spec.core_size : std::max(3, spec.n / 50);
        const auto ratios = star ? bh_star_ratios(r, spec.delta) : bh_star_star_ratios(r, spec.delta);
        const int x = round_half_up(Rational(spec.n - m) / (1 + (r - 3) * ratios.y + ratios.z));
        auto sizes = from_ratios(r, x, ratios);
        sizes.core = m;
        auto core = borsuk_circle_core(m, spec.eps, x);
        c = assemble(core.graph, m, "U'", sizes);
        c.report = density_report(c.graph, r, spec.delta, eval.value);
        c.report.parts = sizes;
        c.report.core = diagnose("circle", core.graph, induced(core.graph, core.roles.get("U'")));
    }
    c.report.kind = spec.kind;
    c.report.warnings.insert(c.report.warnings.begin(), warnings.begin(), warnings.end());
    return c;
}

Construction build_bh_star(ConstructionSpec spec)
{
    spec.kind = ConstructionKind::bh_star;
    return build(spec);
}

Construction build_bh_star_star(ConstructionSpec spec)
{
    spec.kind = ConstructionKind::bh_star_star;
    return build(spec);
}

Construction build_eg(ConstructionSpec spec)
{
    spec.kind = ConstructionKind::eg;
    return build(spec);
}

nlohmann::ordered_json to_json(const ConstructionReport& rep)
{
    nlohmann::ordered_json parts;
    parts["core"] = rep.parts.core;
    parts["X"] = rep.parts.x;
    parts["Y"] = rep.parts.y;
    parts["Z"] = rep.parts.z;

    nlohmann::ordered_json core;
    core["name"] = rep.core.name;
    core["order"] = rep.core.order;
    core["edges"] = rep.core.edges;
    core["girth"] = rep.core.girth ? nlohmann::ordered_json(*rep.core.girth) : nlohmann::ordered_json();
    core["triangle_free"] = rep.core.triangle_free;
    core["chi"] = rep.core.chi ? nlohmann::ordered_json(*rep.core.chi) : nlohmann::ordered_json();
    core["small_subgraphs_near_acyclic"] = rep.core.small_subgraphs_near_acyclic;

    nlohmann::ordered_json j;
    j["kind"] = kind_name(rep.kind);
    j["r"] = rep.r;
    j["delta"] = to_string(rep.delta);
    j["n"] = rep.n;
    j["parts"] = parts;
    j["edges"] = rep.edges;
    j["min_degree"] = rep.min_degree;
    j["density"] = rep.density;
    j["target"] = to_double(rep.target);
    j["target_exact"] = to_string(rep.target);
    j["deviation"] = rep.deviation;
    j["clique_number"] = rep.clique_number ? nlohmann::ordered_json(*rep.clique_number) : nlohmann::ordered_json();
    if (rep.contains_forbidden)
        j["contains_forbidden"] = *rep.contains_forbidden;
    j["core"] = core;
    j["warnings"] = rep.warnings;
    return j;
}

} // namespace critwin
