#include "doctest.h"

#include <random>

#include "critwin/cliques.hpp"
#include "critwin/coloring.hpp"
#include "critwin/cycles.hpp"
#include "critwin/enumerate.hpp"
#include "critwin/errors.hpp"
#include "critwin/graph.hpp"
#include "critwin/independence.hpp"
#include "test_support.hpp"

using namespace critwin;

TEST_CASE("graph_from_edges builds, deduplicates and validates")
{
    auto k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));

    auto c5 = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edge_count() == 5);
    CHECK(girth(c5) == 5);

    CHECK(graph_from_edges(4, {{0, 1}, {0, 1}}).edge_count() == 1);
    CHECK(graph_from_edges(4, {{1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(graph_from_edges(3, {{-1, 2}}), std::out_of_range);
    CHECK_THROWS_AS(graph_from_edges(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("degree sum is twice the edge count")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testing::random_graph(1 + trial % 20, 0.4, rng);
        std::int64_t sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            sum += g.degree(v);
            CHECK_FALSE(g.adjacent(v, v));
            for (Vertex u : g.neighbors(v))
                CHECK(g.adjacent(u, v));
        }
        CHECK(sum == 2 * g.edge_count());
        CHECK(static_cast<std::int64_t>(g.edges().size()) == g.edge_count());
    }
}

TEST_CASE("turan graphs")
{
    CHECK(turan_graph(2, 4) == complete_bipartite(2, 2));
    CHECK(turan_graph(2, 4).edge_count() == 4);
    auto t36 = turan_graph(3, 6);
    CHECK(t36.edge_count() == 12);
    CHECK(chromatic_number(t36) == 3);
    CHECK(clique_number(t36) == 3);
    CHECK(turan_graph(1, 5).edge_count() == 0);
    CHECK(turan_graph(3, 0).order() == 0);

    SUBCASE("closed-form edge count for 1 <= r <= n <= 30")
    {
        for (int n = 1; n <= 30; ++n)
            for (int r = 1; r <= n; ++r) {
                std::int64_t squares = 0;
                for (int s : turan_part_sizes(r, n))
                    squares += s * s;
                auto t = turan_graph(r, n);
                REQUIRE(t.edge_count() == (n * n - squares) / 2);
                REQUIRE(turan_edge_count(r, n) == t.edge_count());
            }
    }
    SUBCASE("chromatic and clique number equal r")
    {
        for (int n = 1; n <= 12; ++n)
            for (int r = 1; r <= n; ++r) {
                auto t = turan_graph(r, n);
                REQUIRE(clique_number(t) == r);
                REQUIRE(chromatic_number(t) == r);
            }
        CHECK(clique_number(turan_graph(3, 9)) == 3);
        CHECK(chromatic_number(turan_graph(4, 8)) == 4);
    }
    SUBCASE("parts differ by at most one")
    {
        auto sizes = turan_part_sizes(4, 11);
        CHECK(sizes == std::vector<int>{3, 3, 3, 2});
    }
}

TEST_CASE("join")
{
    CHECK(join(empty_graph(2), empty_graph(2)) == complete_bipartite(2, 2));
    CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
    CHECK(join(turan_graph(1, 3), turan_graph(2, 4)).edge_count() == 16);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testing::random_graph(trial % 7, 0.5, rng);
        auto h = testing::random_graph(trial % 5 + 1, 0.5, rng);
        auto j = join(g, h);
        CHECK(j.edge_count() == g.edge_count() + h.edge_count() + g.order() * h.order());
    }
}

TEST_CASE("induced subgraphs")
{
    auto c5 = cycle_graph(5);
    auto p3 = induced(c5, VertexSet(5, {0, 1, 2}));
    CHECK(p3 == path_graph(3));
    CHECK(induced(c5, c5.vertices()) == c5);
    CHECK(induced(complete_graph(5), VertexSet(5, {0, 2, 4})) == complete_graph(3));
    CHECK_THROWS(induced(c5, VertexSet(7, {6})));
    // relative order is preserved
    auto g = graph_from_edges(4, {{1, 3}});
    CHECK(induced(g, VertexSet(4, {1, 3})) == complete_graph(2));
}

TEST_CASE("clique number against subset enumeration")
{
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(count_cliques(complete_graph(4), 3) == 4);
    CHECK(count_cliques(complete_graph(4), 0) == 1);
    CHECK(count_cliques(cycle_graph(5), 1) == 5);
    CHECK(has_clique(complete_graph(4), 4));
    CHECK_FALSE(has_clique(complete_graph(4), 5));
    CHECK(is_clique(complete_graph(4), maximum_clique(complete_graph(4))));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing::random_graph(1 + trial % 12, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
        const int omega = testing::brute_clique_number(g);
        REQUIRE(clique_number(g) == omega);
        REQUIRE(maximum_clique(g).size() == omega);
        REQUIRE(is_clique(g, maximum_clique(g)));
        for (int k = 0; k <= omega + 1; ++k) {
            REQUIRE(has_clique(g, k) == (omega >= k));
            REQUIRE(count_cliques(g, k) == testing::brute_count_cliques(g, k));
        }
    }
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(grotzsch_graph()) == 4);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(empty_graph(0)) == 0);
    CHECK(chromatic_number(empty_graph(3)) == 1);
    CHECK_THROWS_AS(chromatic_number(complete_graph(17)), SearchLimitExceeded);
    CHECK(chromatic_number(complete_graph(17), {.max_order = 20}) == 17);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing::random_graph(1 + trial % 8, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
        const int chi = chromatic_number(g);
        REQUIRE(chi == testing::brute_chromatic_number(g));
        auto c = find_colouring(g, chi);
        REQUIRE(c);
        REQUIRE(is_proper_colouring(g, *c));
        REQUIRE(is_bipartite(g) == (chi <= 2));
    }
}

TEST_CASE("girth and forests")
{
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK_FALSE(girth(star_graph(4)).has_value());
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(grotzsch_graph()) == 4);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(is_forest(path_graph(4)));
    CHECK_FALSE(is_forest(cycle_graph(3)));
    CHECK(is_forest(empty_graph(0)));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing::random_graph(1 + trial % 9, 0.15 + 0.1 * (trial % 5), rng);
        auto cycles = simple_cycles(g);
        REQUIRE(girth(g).has_value() == !is_forest(g));
        if (girth(g)) {
            std::size_t shortest = 100;
            for (const auto& c : cycles)
                shortest = std::min(shortest, c.size());
            REQUIRE(static_cast<int>(shortest) == *girth(g));
        } else {
            REQUIRE(cycles.empty());
        }
    }
}

TEST_CASE("odd cycle enumeration")
{
    auto c5 = odd_cycles(cycle_graph(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0] == Cycle{0, 1, 2, 3, 4});

    auto k4 = odd_cycles(complete_graph(4));
    CHECK(k4.size() == 4);
    for (const auto& c : k4)
        CHECK(c.size() == 3);
    // K4 has 4 triangles and 3 four-cycles.
    CHECK(simple_cycles(complete_graph(4)).size() == 7);
    // K5: C(5,3) + 3*C(5,4) + 12 = 10 + 15 + 12.
    CHECK(simple_cycles(complete_graph(5)).size() == 37);
    CHECK(odd_cycles(complete_graph(5)).size() == 22);
    CHECK(odd_cycles(path_graph(6)).empty());
    CHECK_THROWS_AS(simple_cycles(complete_graph(7), {.max_cycles = 10}), SearchLimitExceeded);
}

TEST_CASE("K_p independence")
{
    CHECK(kp_independence(complete_graph(5), 2) == 1);
    CHECK(kp_independence(complete_graph(5), 3) == 2);
    CHECK(kp_independence(cycle_graph(5), 2) == 2);
    CHECK(independence_number(petersen_graph()) == 4);
    CHECK_THROWS(kp_independence(cycle_graph(5), 1));
    CHECK_THROWS_AS(kp_independence(empty_graph(21), 2), SearchLimitExceeded);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = testing::random_graph(1 + trial % 9, 0.3 + 0.1 * (trial % 5), rng);
        for (int p = 2; p <= 4; ++p)
            REQUIRE(kp_independence(g, p) == testing::brute_kp_independence(g, p));
    }
}

TEST_CASE("alpha_p is monotone in p on every labelled graph with n <= 6")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_labeled_graphs(n))
            for (int p = 2; p <= 4; ++p)
                REQUIRE(kp_independence(g, p) <= kp_independence(g, p + 1));
}

TEST_CASE("alpha_p is monotone in p on sampled labelled graphs with n = 7")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::uint64_t> pick(0, labeled_graph_count(7) - 1);
    for (int trial = 0; trial < 3000; ++trial) {
        auto g = labeled_graph(7, pick(rng));
        for (int p = 2; p <= 4; ++p)
            REQUIRE(kp_independence(g, p) <= kp_independence(g, p + 1));
    }
}

TEST_CASE("labelled enumeration")
{
    CHECK(labeled_graph_count(2) == 2);
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(7) == (1U << 21));
    CHECK_THROWS_AS(labeled_graph_count(8), SearchLimitExceeded);

    std::vector<Graph> all;
    for (const auto& g : enumerate_labeled_graphs(4))
        all.push_back(g);
    CHECK(all.size() == 64);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            REQUIRE_FALSE(all[i] == all[j]);
    CHECK(labeled_graph(3, 7) == complete_graph(3));
}

TEST_CASE("role partitions")
{
    RolePartition roles(6);
    roles.assign("X", VertexSet(6, {0, 1}));
    roles.assign("Y", VertexSet(6, {2, 3}));
    CHECK(roles.get("X").size() == 2);
    CHECK(roles.covered() == VertexSet(6, {0, 1, 2, 3}));
    CHECK_THROWS(roles.assign("Z", VertexSet(6, {1, 4})));
    CHECK_THROWS(roles.assign("X", VertexSet(6, {5})));
    CHECK_THROWS(roles.assign("W", VertexSet(8, {7})));
    CHECK_THROWS(roles.get("Q"));
}

TEST_CASE("describe recognises small shapes")
{
    CHECK(describe(complete_graph(2)) == "K2");
    CHECK(describe(cycle_graph(5)) == "C5");
    CHECK(describe(path_graph(4)) == "P4");
    CHECK(describe(empty_graph(3)) == "empty(3)");
    CHECK(describe(star_graph(4)) == "K1,4");
}
