#include "critwin/oracles.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>

#include "critwin/bounds.hpp"
#include "critwin/cliques.hpp"
#include "critwin/coloring.hpp"
#include "critwin/enumerate.hpp"
#include "critwin/graph_io.hpp"
#include "critwin/matching.hpp"
#include "critwin/parallel.hpp"
#include "critwin/zykov.hpp"

namespace critwin {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Per-chunk accumulator; merged in chunk order.
struct Partial {
    std::uint64_t graphs = 0, instances = 0, violation_count = 0, equality_count = 0;
    std::vector<Witness> violations;
    std::map<std::string, Witness> equalities;
    std::map<std::string, std::uint64_t> tallies;

    void violation(Witness w, std::size_t cap)
    {
        ++violation_count;
        if (violations.size() < cap)
            violations.push_back(std::move(w));
    }
    void equality(const std::string& key, Witness w)
    {
        ++equality_count;
        equalities.try_emplace(key, std::move(w));
    }
};

void merge_into(Partial& total, Partial&& part, std::size_t cap)
{
    total.graphs += part.graphs;
    total.instances += part.instances;
    total.violation_count += part.violation_count;
    total.equality_count += part.equality_count;
    for (auto& w : part.violations)
        if (total.violations.size() < cap)
            total.violations.push_back(std::move(w));
    for (auto& [k, w] : part.equalities)
        total.equalities.try_emplace(k, std::move(w));
    for (auto& [k, v] : part.tallies)
        total.tallies[k] += v;
}

OracleReport finish(std::string statement, json parameters, std::string corpus, Partial&& p, Clock::time_point start)
{
    OracleReport rep;
    rep.statement = std::move(statement);
    rep.parameters = std::move(parameters);
    rep.corpus = std::move(corpus);
    rep.graphs = p.graphs;
    rep.instances = p.instances;
    rep.violation_count = p.violation_count;
    rep.violations = std::move(p.violations);
    rep.equality_count = p.equality_count;
    for (auto& [k, w] : p.equalities)
        rep.equalities.push_back(std::move(w));
    for (auto& [k, v] : p.tallies)
        rep.extra[k] = v;
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
}

// Calls check(g, n, index, partial) for every graph of the corpus.
template <typename Check>
Partial scan(const Corpus& corpus, const OracleOptions& options, Check check)
{
    Partial total;
    auto run = [&](int n, std::uint64_t count, auto graph_at) {
        auto parts = map_chunks<Partial>(count, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            Partial p;
            for (std::uint64_t i = begin; i < end; ++i) {
                ++p.graphs;
                check(graph_at(i), n, i, p);
            }
            return p;
        });
        for (auto& p : parts)
            merge_into(total, std::move(p), options.max_violations);
    };
    if (corpus.is_labeled()) {
        for (int n = corpus.n_min; n <= corpus.n_max; ++n)
            run(n, labeled_graph_count(n), [n](std::uint64_t i) { return labeled_graph(n, i); });
    } else {
        auto parts = map_chunks<Partial>(corpus.graphs.size(), options.workers,
                                         [&](std::uint64_t begin, std::uint64_t end) {
                                             Partial p;
                                             for (std::uint64_t i = begin; i < end; ++i) {
                                                 const auto& g = corpus.graphs[i];
                                                 ++p.graphs;
                                                 check(g, g.order(), i, p);
                                             }
                                             return p;
                                         });
        for (auto& p : parts)
            merge_into(total, std::move(p), options.max_violations);
    }
    return total;
}

json members(const VertexSet& s)
{
    return json(s.to_vector());
}

VertexSet from_members(int n, const json& j)
{
    VertexSet s(n);
    for (const auto& v : j)
        s.insert(v.get<int>());
    return s;
}

Witness make_witness(const Graph& g, int n, std::uint64_t index, json data)
{
    return {n, index, edge_string(g), std::move(data)};
}

// ---- Lemma on A u B ------------------------------------------------------

enum class Verdict { skip, below_threshold, holds, equality, violation };

struct BasicCheck {
    Verdict verdict = Verdict::skip;
    std::int64_t bound = 0;
};

// G is assumed K_r-free.
BasicCheck check_basic(const Graph& g, const VertexSet& a_set, int r, int t)
{
    const int n = g.order(), a = a_set.size();
    if (has_clique(g, a_set, t))
        return {};
    const auto bound = lemma_basic_bound(n, a, r, t);
    const auto e = g.edge_count();
    if (static_cast<std::int64_t>(a) * (r - 1) < static_cast<std::int64_t>(t - 1) * n)
        return {e > bound ? Verdict::violation : Verdict::below_threshold, bound};
    return {e > bound ? Verdict::violation : e == bound ? Verdict::equality : Verdict::holds, bound};
}

// ---- Lemma on X u Y u Z --------------------------------------------------

struct XyzCheck {
    Verdict verdict = Verdict::skip;
    std::int64_t doubled_bound = 0; // 2(r-3) times the bound
};

XyzCheck check_xyz(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z, int r)
{
    const std::int64_t nx = x.size(), ny = y.size(), nz = z.size();
    if (ny < (r - 3) * nx || nx < nz)
        return {};
    if (has_clique(g, y, r - 2) || has_clique(g, x | y, r - 1))
        return {};
    const std::int64_t bound = (r - 4) * ny * ny + 2 * (r - 3) * (nx * ny + ny * nz + nz * nx);
    const std::int64_t lhs = 2 * (r - 3) * g.edge_count();
    return {lhs > bound ? Verdict::violation : lhs == bound ? Verdict::equality : Verdict::holds, bound};
}

// ---- Andrasfai-Erdos-Sos --------------------------------------------------

// Returns violation, equality (boundary witness) or holds / skip. G is
// assumed K_r-free.
Verdict check_aes(const Graph& g, int r, int* chi_out = nullptr)
{
    const int n = g.order();
    if (n == 0)
        return Verdict::skip;
    const std::int64_t lhs = static_cast<std::int64_t>(3 * r - 4) * g.min_degree();
    const std::int64_t rhs = static_cast<std::int64_t>(3 * r - 7) * n;
    if (lhs < rhs)
        return Verdict::skip;
    const int chi = chromatic_number(g);
    if (chi_out)
        *chi_out = chi;
    if (lhs > rhs)
        return chi >= r ? Verdict::violation : Verdict::holds;
    return chi >= r ? Verdict::equality : Verdict::below_threshold;
}

void need(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

std::string Corpus::describe() const
{
    if (is_labeled())
        return "all labelled graphs on " + std::to_string(n_min) + ".." + std::to_string(n_max) + " vertices";
    return std::to_string(graphs.size()) + " supplied graphs";
}

std::int64_t lemma_basic_bound(int n, int a, int r, int t)
{
    need(2 <= t && t < r, "lemma bound needs 2 <= t < r");
    need(0 <= a && a <= n, "lemma bound needs 0 <= a <= n");
    return turan_edge_count(t - 1, a) + turan_edge_count(r - t, n - a) + static_cast<std::int64_t>(a) * (n - a);
}

OracleReport verify_lemma_basic(const Corpus& corpus, int r, int t, OracleOptions options)
{
    need(2 <= t && t < r, "lemma-basic needs 2 <= t < r");
    const auto start = Clock::now();
    auto total = scan(corpus, options, [&](const Graph& g, int n, std::uint64_t index, Partial& p) {
        if (has_clique(g, r))
            return;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const auto a_set = VertexSet::from_mask(n, m);
            const auto c = check_basic(g, a_set, r, t);
            if (c.verdict == Verdict::skip)
                continue;
            const int a = a_set.size();
            if (static_cast<std::int64_t>(a) * (r - 1) < static_cast<std::int64_t>(t - 1) * n) {
                // below the size threshold: tallied, not asserted
                ++p.tallies["below_threshold_instances"];
                if (c.verdict == Verdict::violation)
                    ++p.tallies["below_threshold_exceeding_bound"];
                continue;
            }
            ++p.instances;
            if (c.verdict == Verdict::holds)
                continue;
            json data{{"r", r}, {"t", t}, {"A", members(a_set)}, {"a", a},
                      {"edges", g.edge_count()}, {"bound", c.bound}};
            if (c.verdict == Verdict::violation)
                p.violation(make_witness(g, n, index, std::move(data)), options.max_violations);
            else
                p.equality("n=" + std::to_string(n) + ",a=" + std::to_string(a),
                           make_witness(g, n, index, std::move(data)));
        }
    });
    return finish("lemma-basic", {{"r", r}, {"t", t}}, corpus.describe(), std::move(total), start);
}

OracleReport verify_lemma_xyz(const Corpus& corpus, int r, OracleOptions options)
{
    need(r >= 4, "lemma-xyz needs r >= 4");
    const auto start = Clock::now();
    auto total = scan(corpus, options, [&](const Graph& g, int n, std::uint64_t index, Partial& p) {
        if (has_clique(g, r))
            return;
        std::vector<int> part(static_cast<std::size_t>(n), 0); // 0 = X, 1 = Y, 2 = Z
        while (true) {
            VertexSet x(n), y(n), z(n);
            for (int v = 0; v < n; ++v)
                (part[static_cast<std::size_t>(v)] == 0 ? x : part[static_cast<std::size_t>(v)] == 1 ? y : z).insert(v);
            const auto c = check_xyz(g, x, y, z, r);
            if (c.verdict != Verdict::skip) {
                ++p.instances;
                if (c.verdict != Verdict::holds) {
                    json data{{"r", r}, {"X", members(x)}, {"Y", members(y)}, {"Z", members(z)},
                              {"edges", g.edge_count()}, {"doubled_bound", c.doubled_bound}};
                    if (c.verdict == Verdict::violation)
                        p.violation(make_witness(g, n, index, std::move(data)), options.max_violations);
                    else
                        p.equality("n=" + std::to_string(n) + ",x=" + std::to_string(x.size()) +
                                       ",y=" + std::to_string(y.size()) + ",z=" + std::to_string(z.size()),
                                   make_witness(g, n, index, std::move(data)));
                }
            }
            int i = 0;
            while (i < n && ++part[static_cast<std::size_t>(i)] == 3)
                part[static_cast<std::size_t>(i++)] = 0;
            if (i == n)
                break;
        }
    });
    return finish("lemma-xyz", {{"r", r}}, corpus.describe(), std::move(total), start);
}

OracleReport verify_aes(const Corpus& corpus, int r, OracleOptions options)
{
    need(r >= 3, "aes needs r >= 3");
    const auto start = Clock::now();
    auto total = scan(corpus, options, [&](const Graph& g, int n, std::uint64_t index, Partial& p) {
        if (n == 0 || static_cast<std::int64_t>(3 * r - 4) * g.min_degree() < static_cast<std::int64_t>(3 * r - 7) * n)
            return;
        if (has_clique(g, r))
            return;
        int chi = 0;
        const auto v = check_aes(g, r, &chi);
        json data{{"r", r}, {"min_degree", g.min_degree()}, {"chi", chi}};
        switch (v) {
        case Verdict::holds:
            ++p.instances;
            break;
        case Verdict::violation:
            ++p.instances;
            p.violation(make_witness(g, n, index, std::move(data)), options.max_violations);
            break;
        case Verdict::equality:
            ++p.tallies["boundary_graphs"];
            p.equality("n=" + std::to_string(n), make_witness(g, n, index, std::move(data)));
            break;
        default:
            ++p.tallies["boundary_graphs"];
            break;
        }
    });
    // boundary witnesses are sharpness examples, not instances of the claim
    auto rep = finish("aes", {{"r", r}}, corpus.describe(), std::move(total), start);
    return rep;
}

OracleReport verify_symmetrization(SymmetrizationOptions sym, OracleOptions options)
{
    need(sym.n_max >= 1 && sym.n_max <= 12, "symmetrization oracle needs 1 <= n_max <= 12");
    std::vector<DegreeMode> modes;
    if (sym.current_mode)
        modes.push_back(DegreeMode::current);
    if (sym.frozen_mode)
        modes.push_back(DegreeMode::frozen);
    const auto start = Clock::now();

    auto parts = map_chunks<Partial>(sym.trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
        Partial p;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            std::seed_seq seq{static_cast<std::uint32_t>(sym.seed), static_cast<std::uint32_t>(sym.seed >> 32),
                              static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
            std::mt19937_64 rng(seq);
            const int n = std::uniform_int_distribution<int>(1, sym.n_max)(rng);
            const double density = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
            std::bernoulli_distribution edge(density), coin(0.5);
            Graph g(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (edge(rng))
                        g.add_edge(u, v);
            VertexSet a(n), x(n), y(n);
            for (Vertex v = 0; v < n; ++v) {
                if (coin(rng))
                    a.insert(v);
                const int role = std::uniform_int_distribution<int>(0, 2)(rng);
                if (role == 0)
                    x.insert(v);
                else if (role == 1)
                    y.insert(v);
            }
            const int r = std::uniform_int_distribution<int>(3, 5)(rng);
            const Vertex su = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const Vertex sv = std::uniform_int_distribution<int>(0, n - 1)(rng);

            ++p.graphs;
            auto fail = [&](const std::string& property, const char* mode) {
                ++p.tallies["violations." + property + (mode[0] ? std::string(".") + mode : std::string())];
                json data{{"property", property}, {"mode", mode}, {"A", members(a)}, {"X", members(x)},
                          {"Y", members(y)}, {"r", r}, {"u", su}, {"v", sv}};
                p.violation(make_witness(g, n, trial, std::move(data)), options.max_violations);
            };

            const int omega = clique_number(g);
            const int omega_a = clique_number(g, a);
            const bool xyr_free = is_xyr_free(g, x, y, r);
            p.tallies["xyr_free_instances"] += xyr_free;
            for (auto mode : modes) {
                const char* name = mode == DegreeMode::current ? "current" : "frozen";
                ++p.instances;
                const auto t = symmetrize_traced(g, a, mode);
                const auto& z = t.graph;
                if (z.edge_count() < g.edge_count())
                    fail("edge_monotone", name);
                if (clique_number(z) > omega)
                    fail("clique_monotone", name);
                if (clique_number(z, a) > omega_a)
                    fail("clique_monotone_in_A", name);
                bool twins = true;
                for (Vertex u : a)
                    for (Vertex v : a)
                        if (u < v && !z.adjacent(u, v) && z.neighbors(u) != z.neighbors(v))
                            twins = false;
                if (!twins)
                    fail("nonadjacent_twins", name);
                if (t.merges > std::max(0, a.size() - 1))
                    fail("merge_count", name);
                if (symmetrize(z, a, mode) != z)
                    fail("idempotent", name);
                if (symmetrize(g, a, mode) != z)
                    fail("deterministic", name);
                if (xyr_free) {
                    if (!is_xyr_free(symmetrize(g, x, mode), x, y, r))
                        fail("preserve_xyr_on_X", name);
                    if (!is_xyr_free(symmetrize(g, y, mode), x, y, r))
                        fail("preserve_xyr_on_Y", name);
                }
            }
            if (su != sv && !g.adjacent(su, sv)) {
                ++p.tallies["step_instances"];
                auto rest = g.vertices();
                rest.erase(su);
                const auto minus = induced(g, rest);
                const auto step = zykov_step(g, su, sv);
                if (chromatic_number(step) > chromatic_number(minus))
                    fail("chi_step", "");
                if (clique_number(step) > clique_number(minus))
                    fail("clique_step", "");
            }
        }
        return p;
    });
    Partial total;
    for (auto& p : parts)
        merge_into(total, std::move(p), options.max_violations);
    json modes_json = json::array();
    for (auto m : modes)
        modes_json.push_back(m == DegreeMode::current ? "current" : "frozen");
    return finish("zykov",
                  {{"trials", sym.trials}, {"seed", sym.seed}, {"n_max", sym.n_max}, {"modes", modes_json}},
                  "seeded random graphs on 1.." + std::to_string(sym.n_max) + " vertices", std::move(total), start);
}

OracleReport verify_claim_sweep(std::span<const int> rs, int samples, double grid_step, OracleOptions options)
{
    need(samples >= 2, "claim sweep needs at least 2 samples per r");
    struct Job {
        int r;
        Rational delta;
    };
    std::vector<Job> jobs;
    for (int r : rs) {
        need(r >= 4, "claim sweep needs r >= 4");
        const auto lo = f1_window_low(r), hi = f1_window_high(r);
        for (int i = 0; i < samples; ++i)
            jobs.push_back({r, lo + (hi - lo) * rat(i, samples - 1)});
    }
    const auto start = Clock::now();
    auto parts = map_chunks<Partial>(
        jobs.size(), options.workers,
        [&](std::uint64_t begin, std::uint64_t end) {
            Partial p;
            for (std::uint64_t i = begin; i < end; ++i) {
                const auto& job = jobs[i];
                const auto c = verify_claim(job.r, job.delta, grid_step);
                ++p.instances;
                p.tallies["grid_points"] += static_cast<std::uint64_t>(c.feasible_points);
                p.tallies["stationary_checks"] += c.stationary_checked;
                p.tallies["boundary_checks"] += c.boundary_checked;
                json data{{"r", job.r},
                          {"delta", to_string(job.delta)},
                          {"regime", regime_name(c.regime)},
                          {"bound", to_string(c.bound)},
                          {"max_excess", c.max_excess},
                          {"argmax", {c.arg_x, c.arg_y}}};
                if (c.stationary_checked)
                    data["stationary"] = {to_string(c.stationary.x), to_string(c.stationary.y)};
                p.tallies["samples"] += 1;
                if (!c.ok())
                    p.violation({0, i, "", data}, options.max_violations);
            }
            return p;
        },
        1);
    Partial total;
    for (auto& p : parts)
        merge_into(total, std::move(p), options.max_violations);
    return finish("claim",
                  {{"r", json(std::vector<int>(rs.begin(), rs.end()))}, {"samples", samples}, {"grid_step", grid_step}},
                  "evenly spaced delta across each window, grid step " + std::to_string(grid_step), std::move(total),
                  start);
}

OracleReport verify_hall(int max_side, OracleOptions options)
{
    need(max_side >= 0 && max_side <= 5, "hall oracle needs sides of at most 5");
    const auto start = Clock::now();
    Partial total;
    for (int p = 0; p <= max_side; ++p)
        for (int q = 0; q <= max_side; ++q) {
            const int n = p + q, bits = p * q;
            VertexSet x(n), y(n);
            for (int i = 0; i < p; ++i)
                x.insert(i);
            for (int j = 0; j < q; ++j)
                y.insert(p + j);
            auto parts = map_chunks<Partial>(std::uint64_t{1} << bits, options.workers,
                                             [&](std::uint64_t begin, std::uint64_t end) {
                                                 Partial part;
                                                 // walk the chunk in Gray-code order so that
                                                 // consecutive graphs differ in one edge
                                                 Graph b(n);
                                                 auto edge_of = [&](int k) { return Edge{k / q, p + k % q}; };
                                                 std::uint64_t code = begin ^ (begin >> 1);
                                                 for (int k = 0; k < bits; ++k)
                                                     if ((code >> k) & 1U)
                                                         b.add_edge(edge_of(k).first, edge_of(k).second);
                                                 for (std::uint64_t i = begin; i < end; ++i) {
                                                     if (i != begin) {
                                                         const int k = std::countr_zero(i);
                                                         const auto [u, v] = edge_of(k);
                                                         if (b.adjacent(u, v))
                                                             b.remove_edge(u, v);
                                                         else
                                                             b.add_edge(u, v);
                                                     }
                                                     ++part.graphs;
                                                     ++part.instances;
                                                     const int matched = matching_number(b, x, y);
                                                     const int deficiency = hall_deficiency(b, x);
                                                     if (matched != p - deficiency)
                                                         part.violation(make_witness(b, n, i ^ (i >> 1),
                                                                                     {{"X", p},
                                                                                      {"Y", q},
                                                                                      {"matching", matched},
                                                                                      {"deficiency", deficiency}}),
                                                                        options.max_violations);
                                                 }
                                                 return part;
                                             });
            for (auto& part : parts)
                merge_into(total, std::move(part), options.max_violations);
        }
    return finish("hall", {{"max_side", max_side}},
                  "all bipartite graphs with sides of at most " + std::to_string(max_side) + " vertices",
                  std::move(total), start);
}

json to_json(const Witness& w)
{
    json j;
    j["n"] = w.n;
    j["index"] = w.index;
    if (!w.graph.empty())
        j["graph"] = w.graph;
    for (auto& [k, v] : w.data.items())
        j[k] = v;
    return j;
}

json to_json(const OracleReport& rep, bool include_timing)
{
    json j;
    j["statement"] = rep.statement;
    j["parameters"] = rep.parameters;
    j["corpus"] = rep.corpus;
    j["graphs"] = rep.graphs;
    j["instances"] = rep.instances;
    j["passed"] = rep.passed();
    j["violation_count"] = rep.violation_count;
    j["violations"] = json::array();
    for (const auto& w : rep.violations)
        j["violations"].push_back(to_json(w));
    j["equality_count"] = rep.equality_count;
    j["equalities"] = json::array();
    for (const auto& w : rep.equalities)
        j["equalities"].push_back(to_json(w));
    j["extra"] = rep.extra;
    if (include_timing)
        j["wall_time_ms"] = rep.wall_time_ms;
    return j;
}

std::string replay(const std::string& statement, const json& w)
{
    const auto g = parse_edge_string(w.at("graph").get<std::string>());
    const int n = g.order();
    const int r = w.at("r").get<int>();
    Verdict v = Verdict::skip;
    if (has_clique(g, r))
        return "none";
    if (statement == "lemma-basic") {
        v = check_basic(g, from_members(n, w.at("A")), r, w.at("t").get<int>()).verdict;
    } else if (statement == "lemma-xyz") {
        v = check_xyz(g, from_members(n, w.at("X")), from_members(n, w.at("Y")), from_members(n, w.at("Z")), r).verdict;
    } else if (statement == "aes") {
        v = check_aes(g, r);
        if (v == Verdict::equality)
            return "boundary";
    } else {
        throw std::invalid_argument("no replay for statement '" + statement + "'");
    }
    switch (v) {
    case Verdict::violation:
        return "violation";
    case Verdict::equality:
        return "equality";
    default:
        return "none";
    }
}

} // namespace critwin
