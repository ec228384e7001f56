#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "critwin/graph.hpp"
#include "critwin/rational.hpp"

namespace critwin {

enum class ConstructionKind { bh_star, bh_star_star, eg };

std::string_view kind_name(ConstructionKind k);
// "bh-star", "bh-star-star", "eg"; throws std::invalid_argument otherwise.
ConstructionKind parse_kind(std::string_view name);

struct PartSizes {
    int core = 0; // U' for the BH kinds, V(E) for eg
    int x = 0;
    std::vector<int> y; // r-3 entries
    int z = 0;

    int y_total() const;
    int total() const;
};

// |Y_i| and |Z| as multiples of |X| (BH kinds) or |X| = |Z| as a multiple
// of |Y_i| (eg). Throw std::invalid_argument when a denominator is not
// positive.
struct PartRatios {
    Rational y, z;
};
PartRatios bh_star_ratios(int r, const Rational& delta);
PartRatios bh_star_star_ratios(int r, const Rational& delta);

// Each part rounded to the nearest integer, halves up; all Y_i equal.
PartSizes part_sizes_bh_star(int r, const Rational& delta, int x_size);
PartSizes part_sizes_bh_star_star(int r, const Rational& delta, int x_size);
// |Y_i| = delta*scale/(r-3), |X| = |Z| = (1-delta)*scale/2, rounded.
PartSizes part_sizes_eg(int r, const Rational& delta, int scale);

// Circle stand-in for the Borsuk-Hajnal part: U' = m points at angles
// 2 pi i/m joined when more than pi - eps apart; X = x_count points at
// 2 pi (j + 1/2)/x_count, independent, with u ~ x when they are more than
// pi/2 + eps/2 apart. Vertices 0..m-1 are U', then X. Throws
// std::invalid_argument on bad parameters and std::logic_error if a
// checked property (triangle-free, X independent, X-degree of U') fails.
struct CircleCore {
    Graph graph;
    RolePartition roles; // "U'" and "X"
    double eps = 0;
};
CircleCore borsuk_circle_core(int m, double eps, int x_count);

// "c5", "petersen", "grotzsch".
Graph builtin_core(std::string_view name);

struct CoreDiagnostics {
    std::string name;
    int order = 0;
    std::int64_t edges = 0;
    std::optional<int> girth;
    bool triangle_free = false;
    // chi of U' (BH kinds) or of E; empty when it was not settled
    std::optional<int> chi;
    // every subgraph on at most 6 vertices with chi = 3 is near-acyclic
    bool small_subgraphs_near_acyclic = false;
};

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::bh_star;
    int r = 4;
    Rational delta;
    int n = 0;             // target vertex count
    int core_size = 0;     // |U'| for the BH kinds; 0 picks max(3, floor(0.02 n))
    double eps = 0.1;      // circle core angle
    std::string core_name = "petersen"; // eg core when core_graph is empty
    std::optional<Graph> core_graph;
};

struct ConstructionReport {
    ConstructionKind kind = ConstructionKind::bh_star;
    int r = 0;
    Rational delta;
    int n = 0;
    PartSizes parts;
    std::int64_t edges = 0;
    int min_degree = 0;
    double density = 0; // e / n^2
    Rational target;
    double deviation = 0;
    std::optional<int> clique_number;
    std::optional<bool> contains_forbidden; // when a pattern was supplied
    CoreDiagnostics core;
    std::vector<std::string> warnings;
};

struct Construction {
    Graph graph;
    RolePartition roles; // core role, "X", "Y1".."Y{r-3}", "Z"
    ConstructionReport report;
};

Construction build(const ConstructionSpec& spec);
Construction build_bh_star(ConstructionSpec spec);
Construction build_bh_star_star(ConstructionSpec spec);
Construction build_eg(ConstructionSpec spec);

struct DensityOptions {
    std::optional<Graph> forbidden;
    std::int64_t clique_node_limit = 0;
};

// Edges, minimum degree, density against target, clique number. A clique
// search over budget leaves clique_number empty and adds a warning.
ConstructionReport density_report(const Graph& g, int r, const Rational& delta, const Rational& target,
                                  DensityOptions options = {});

nlohmann::ordered_json to_json(const ConstructionReport& report);

} // namespace critwin
