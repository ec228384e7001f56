#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "critwin/graph.hpp"

namespace critwin {

// One checked instance worth keeping: which graph (n and its index in the
// corpus), the graph itself as an edge string, and the parameters needed to
// re-check it in isolation.
struct Witness {
    int n = 0;
    std::uint64_t index = 0;
    std::string graph;
    nlohmann::ordered_json data;
};

struct OracleReport {
    std::string statement;
    nlohmann::ordered_json parameters;
    std::string corpus;
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;
    std::uint64_t violation_count = 0;
    std::vector<Witness> violations; // first few, by corpus position
    std::uint64_t equality_count = 0;
    std::vector<Witness> equalities; // first per parameter key
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    double wall_time_ms = 0;

    bool passed() const { return violation_count == 0; }
};

struct OracleOptions {
    int workers = 1;
    std::size_t max_violations = 20;
};

// A corpus is either every labelled graph on n_min..n_max vertices
// (n_max <= 7) or an explicit list, e.g. read from a graph6 stream.
struct Corpus {
    int n_min = 1;
    int n_max = 0;
    std::vector<Graph> graphs;

    static Corpus labeled(int n_max, int n_min = 1) { return {n_min, n_max, {}}; }
    static Corpus of(std::vector<Graph> graphs) { return {0, 0, std::move(graphs)}; }
    bool is_labeled() const { return graphs.empty(); }
    std::string describe() const;
};

// e(T_{t-1}(a) v T_{r-t}(n-a)).
std::int64_t lemma_basic_bound(int n, int a, int r, int t);

// For K_r-free G and A with G[A] K_t-free and (r-1)|A| >= (t-1)n, checks
// e(G) <= lemma_basic_bound. Smaller A are tallied in extra without being
// asserted. Requires 2 <= t < r.
OracleReport verify_lemma_basic(const Corpus& corpus, int r, int t, OracleOptions options = {});

// For K_r-free G and ordered partitions (X, Y, Z) with G[Y] K_{r-2}-free,
// G[X u Y] K_{r-1}-free and |Y| >= (r-3)|X| >= (r-3)|Z|, checks
// 2(r-3)e <= (r-4)|Y|^2 + 2(r-3)(|X||Y| + |Y||Z| + |Z||X|). Requires r >= 4.
OracleReport verify_lemma_xyz(const Corpus& corpus, int r, OracleOptions options = {});

// K_r-free with (3r-4) delta(G) > (3r-7) n implies chi <= r-1. Graphs with
// equality in the degree condition and chi >= r are kept as boundary
// witnesses.
OracleReport verify_aes(const Corpus& corpus, int r, OracleOptions options = {});

struct SymmetrizationOptions {
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    int n_max = 9;
    bool current_mode = true;
    bool frozen_mode = true;
};

// Seeded random (G, A) and (G, X, Y, r) instances; each trial draws from
// its own generator seeded by (seed, trial), so sharding does not matter.
OracleReport verify_symmetrization(SymmetrizationOptions sym, OracleOptions options = {});

// verify_claim for every r in rs at `samples` evenly spaced delta across
// the window, endpoints included.
OracleReport verify_claim_sweep(std::span<const int> rs, int samples, double grid_step, OracleOptions options = {});

// matching_number against |X| - hall_deficiency for every bipartite graph
// with sides of size at most max_side (<= 5).
OracleReport verify_hall(int max_side, OracleOptions options = {});

nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const OracleReport& report, bool include_timing = false);

// Re-checks a stored witness of one of the graph-corpus statements
// ("lemma-basic", "lemma-xyz", "aes") and returns the kind it falls in
// now: "violation", "equality", "boundary" or "none".
std::string replay(const std::string& statement, const nlohmann::ordered_json& witness);

} // namespace critwin
