#include "doctest.h"

#include <random>

#include "critwin/errors.hpp"
#include "critwin/graph.hpp"
#include "critwin/matching.hpp"
#include "critwin/subgraph.hpp"
#include "test_support.hpp"

using namespace critwin;

TEST_CASE("matching number and Hall deficiency on small cases")
{
    auto k33 = complete_bipartite(3, 3);
    VertexSet x(6, {0, 1, 2}), y(6, {3, 4, 5});
    CHECK(matching_number(k33, x, y) == 3);
    CHECK(hall_deficiency(k33, x) == 0);

    // Star K_{1,4}: centre 0, the four leaves form X.
    auto star = star_graph(4);
    VertexSet leaves(5, {1, 2, 3, 4}), centre(5, {0});
    CHECK(hall_deficiency(star, leaves) == 3);
    CHECK(matching_number(star, leaves, centre) == 1);
    CHECK(matching_number(star, centre, leaves) == 1);

    CHECK(matching_number(empty_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 0);
    CHECK(hall_deficiency(empty_graph(4), VertexSet(4, {0, 1})) == 2);
}

TEST_CASE("matching rejects inputs that are not bipartite across the sides")
{
    auto tri = complete_graph(3);
    CHECK_THROWS_AS(matching_number(tri, VertexSet(3, {0}), VertexSet(3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(matching_number(complete_bipartite(2, 2), VertexSet(4, {0, 1}), VertexSet(4, {1, 2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(hall_deficiency(tri, VertexSet(3, {0, 1})), std::invalid_argument);
}

TEST_CASE("returned matching is a matching")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 1 + trial % 6, q = 1 + (trial / 6) % 6;
        Graph b(p + q);
        std::bernoulli_distribution coin(0.35);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j)
                if (coin(rng))
                    b.add_edge(i, p + j);
        VertexSet x(p + q), y(p + q);
        for (int i = 0; i < p; ++i)
            x.insert(i);
        for (int j = 0; j < q; ++j)
            y.insert(p + j);
        auto m = maximum_matching(b, x, y);
        VertexSet touched(p + q);
        for (auto [u, v] : m) {
            REQUIRE(b.adjacent(u, v));
            REQUIRE_FALSE(touched.contains(u));
            REQUIRE_FALSE(touched.contains(v));
            touched.insert(u);
            touched.insert(v);
        }
        REQUIRE(static_cast<int>(m.size()) == p - hall_deficiency(b, x));
    }
}

TEST_CASE("subgraph containment")
{
    CHECK_FALSE(contains_subgraph(complete_graph(3), cycle_graph(5)));
    CHECK(contains_subgraph(complete_graph(3), complete_graph(4)));
    CHECK(contains_subgraph(cycle_graph(5), petersen_graph()));
    CHECK_FALSE(contains_subgraph(cycle_graph(4), petersen_graph()));
    CHECK(contains_subgraph(cycle_graph(4), grotzsch_graph()));
    CHECK_FALSE(contains_subgraph(complete_graph(3), grotzsch_graph()));
    // not induced: P3 sits inside K3
    CHECK(contains_subgraph(path_graph(3), complete_graph(3)));
    CHECK(contains_subgraph(empty_graph(3), empty_graph(3)));
    CHECK_FALSE(contains_subgraph(empty_graph(4), complete_graph(3)));

    auto map = find_subgraph(cycle_graph(5), petersen_graph());
    REQUIRE(map);
    for (auto [u, v] : cycle_graph(5).edges())
        CHECK(petersen_graph().adjacent((*map)[static_cast<std::size_t>(u)], (*map)[static_cast<std::size_t>(v)]));

    CHECK_THROWS_AS(contains_subgraph(complete_graph(6), turan_graph(5, 40), {.node_limit = 100}),
                    SearchLimitExceeded);
}

TEST_CASE("isomorphism test")
{
    auto relabelled = graph_from_edges(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    CHECK(is_isomorphic(relabelled, cycle_graph(5)));
    CHECK_FALSE(is_isomorphic(path_graph(5), cycle_graph(5)));
    CHECK_FALSE(is_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6)));
    CHECK(is_isomorphic(complete_bipartite(2, 2), cycle_graph(4)));
}
