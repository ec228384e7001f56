#include "doctest.h"

#include <algorithm>
#include <bit>

#include "critwin/graph_io.hpp"
#include "critwin/oracles.hpp"
#include "critwin/subgraph.hpp"
#include "test_support.hpp"

using namespace critwin;

namespace {

std::uint64_t labelled_total(int n_min, int n_max)
{
    std::uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n)
        total += std::uint64_t{1} << (n * (n - 1) / 2);
    return total;
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((mask >> k) & 1U)
                g.add_edge(u, v);
    return g;
}

bool mask_has_clique(const Graph& g, std::uint32_t within, int k)
{
    for (std::uint32_t m = within;; m = (m - 1) & within) {
        if (std::popcount(m) == k && testing::mask_is_clique(g, m))
            return true;
        if (m == 0)
            return false;
    }
}

// Pair (G, A) checks for the basic lemma, counted without the library's
// enumeration, clique search or Turan helpers.
struct BasicCounts {
    std::uint64_t instances = 0, equalities = 0, violations = 0;
};

std::int64_t turan_edges_by_formula(int k, int m)
{
    if (k <= 0 || m == 0)
        return 0;
    std::int64_t sum_sq = 0;
    for (int i = 0; i < k; ++i) {
        const std::int64_t part = m / k + (i < m % k ? 1 : 0);
        sum_sq += part * part;
    }
    return (static_cast<std::int64_t>(m) * m - sum_sq) / 2;
}

BasicCounts brute_basic(int n_max, int r, int t)
{
    BasicCounts c;
    for (int n = 1; n <= n_max; ++n) {
        const std::uint32_t all = (1U << n) - 1;
        for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << (n * (n - 1) / 2)); ++gm) {
            const auto g = graph_from_mask(n, gm);
            if (mask_has_clique(g, all, r))
                continue;
            for (std::uint32_t a = 0; a <= all; ++a) {
                const int size = std::popcount(a);
                if (mask_has_clique(g, a, t) || size * (r - 1) < (t - 1) * n)
                    continue;
                const auto bound = turan_edges_by_formula(t - 1, size) + turan_edges_by_formula(r - t, n - size) +
                                   static_cast<std::int64_t>(size) * (n - size);
                ++c.instances;
                c.equalities += g.edge_count() == bound;
                c.violations += g.edge_count() > bound;
            }
        }
    }
    return c;
}

} // namespace

TEST_CASE("basic lemma bound values")
{
    CHECK(lemma_basic_bound(4, 2, 3, 2) == 4);
    CHECK(lemma_basic_bound(6, 3, 4, 2) == turan_edges_by_formula(2, 3) + 9);
    CHECK(lemma_basic_bound(5, 0, 3, 2) == 0);
    CHECK(lemma_basic_bound(5, 0, 4, 2) == 6);
    CHECK_THROWS(lemma_basic_bound(4, 2, 3, 3));
    CHECK_THROWS(lemma_basic_bound(4, 5, 3, 2));
}

TEST_CASE("basic lemma oracle agrees with an independent count")
{
    for (auto [r, t] : {std::pair{3, 2}, {4, 2}, {4, 3}}) {
        CAPTURE(r);
        CAPTURE(t);
        const auto rep = verify_lemma_basic(Corpus::labeled(4), r, t);
        const auto brute = brute_basic(4, r, t);
        CHECK(rep.passed());
        CHECK(rep.graphs == labelled_total(1, 4));
        CHECK(rep.instances == brute.instances);
        CHECK(rep.equality_count == brute.equalities);
        CHECK(rep.violation_count == brute.violations);
    }
}

TEST_CASE("C4 is the equality case at r=3, t=2, n=4, a=2")
{
    const auto rep = verify_lemma_basic(Corpus::labeled(4), 3, 2);
    REQUIRE(rep.passed());
    bool found = false;
    for (const auto& w : rep.equalities)
        if (w.n == 4 && w.data["a"] == 2) {
            found = true;
            CHECK(is_isomorphic(parse_edge_string(w.graph), cycle_graph(4)));
            CHECK(replay("lemma-basic", to_json(w)) == "equality");
        }
    CHECK(found);
}

TEST_CASE("reports do not depend on the number of workers")
{
    const auto corpus = Corpus::labeled(5);
    CHECK(to_json(verify_lemma_basic(corpus, 4, 3, {.workers = 1})) ==
          to_json(verify_lemma_basic(corpus, 4, 3, {.workers = 3})));
    CHECK(to_json(verify_lemma_xyz(Corpus::labeled(4), 4, {.workers = 1})) ==
          to_json(verify_lemma_xyz(Corpus::labeled(4), 4, {.workers = 4})));
    CHECK(to_json(verify_aes(corpus, 3, {.workers = 1})) == to_json(verify_aes(corpus, 3, {.workers = 2})));
    const SymmetrizationOptions sym{.trials = 200, .seed = 7, .n_max = 7};
    CHECK(to_json(verify_symmetrization(sym, {.workers = 1})) == to_json(verify_symmetrization(sym, {.workers = 3})));
}

TEST_CASE("timing appears only on request")
{
    const auto rep = verify_aes(Corpus::labeled(3), 3);
    CHECK_FALSE(to_json(rep).contains("wall_time_ms"));
    CHECK(to_json(rep, true).contains("wall_time_ms"));
}

TEST_CASE("lemma on X, Y, Z holds on small graphs and replays")
{
    for (int r : {4, 5}) {
        const auto rep = verify_lemma_xyz(Corpus::labeled(4), r);
        CHECK(rep.passed());
        CHECK(rep.instances > 0);
        for (const auto& w : rep.equalities)
            CHECK(replay("lemma-xyz", to_json(w)) == "equality");
    }
    CHECK_THROWS(verify_lemma_xyz(Corpus::labeled(3), 3));
}

TEST_CASE("AES oracle: C5 sits on the boundary")
{
    const auto rep = verify_aes(Corpus::labeled(6), 3);
    CHECK(rep.passed());
    bool c5 = false;
    for (const auto& w : rep.equalities) {
        CHECK(replay("aes", to_json(w)) == "boundary");
        c5 = c5 || is_isomorphic(parse_edge_string(w.graph), cycle_graph(5));
    }
    CHECK(c5);

    const auto explicit_rep = verify_aes(Corpus::of({cycle_graph(5), complete_bipartite(3, 3)}), 3);
    CHECK(explicit_rep.graphs == 2);
    CHECK(explicit_rep.instances == 1); // K3,3 has 5 delta > 2 n
    CHECK(explicit_rep.equality_count == 1);
}

TEST_CASE("replay notices a tampered witness")
{
    const auto rep = verify_lemma_basic(Corpus::labeled(4), 3, 2);
    const auto it = std::find_if(rep.equalities.begin(), rep.equalities.end(),
                                 [](const Witness& w) { return w.n == 4; });
    REQUIRE(it != rep.equalities.end());
    auto w = to_json(*it);
    auto g = parse_edge_string(w["graph"].get<std::string>());
    const auto e = g.edges();
    REQUIRE_FALSE(e.empty());
    g.remove_edge(e.front().first, e.front().second);
    w["graph"] = edge_string(g);
    CHECK(replay("lemma-basic", w) == "none");
    CHECK_THROWS(replay("hall", w));
}

TEST_CASE("Hall oracle covers every small bipartite graph")
{
    const auto rep = verify_hall(3);
    CHECK(rep.passed());
    std::uint64_t expected = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            expected += std::uint64_t{1} << (p * q);
    CHECK(rep.graphs == expected);
    CHECK(to_json(verify_hall(3, {.workers = 1})) == to_json(verify_hall(3, {.workers = 2})));
}

TEST_CASE("symmetrization oracle: current mode is clean, frozen mode loses edges")
{
    const auto rep = verify_symmetrization({.trials = 2000, .seed = 1, .n_max = 7});
    CHECK(rep.instances == 4000);
    const auto& extra = rep.extra;
    CHECK_FALSE(extra.contains("violations.edge_monotone.current"));
    CHECK(extra.contains("violations.edge_monotone.frozen"));
    for (auto& [key, value] : extra.items()) {
        if (key.starts_with("violations."))
            CHECK_MESSAGE(key == "violations.edge_monotone.frozen", key);
    }
    CHECK(extra["xyr_free_instances"].get<std::uint64_t>() > 0);

    const auto current = verify_symmetrization({.trials = 2000, .seed = 1, .n_max = 7, .frozen_mode = false});
    CHECK(current.passed());
}

TEST_CASE("claim sweep over a coarse grid")
{
    const std::vector<int> rs{4, 5};
    const auto rep = verify_claim_sweep(rs, 3, 1e-2);
    CHECK(rep.passed());
    CHECK(rep.instances == 6);
    CHECK(rep.extra["stationary_checks"].get<int>() + rep.extra["boundary_checks"].get<int>() == 6);
}
