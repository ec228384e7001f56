#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critwin/coloring.hpp"
#include "critwin/graph.hpp"
#include "critwin/rational.hpp"

namespace critwin {

struct ClassifierOptions {
    int max_order = 12;
    std::int64_t max_cycles = 1'000'000;
    // When set, independent sets are tried in a seeded shuffled order. The
    // verdict never depends on it; the witness may.
    std::optional<std::uint64_t> seed;
};

// Every proper colouring with colours 0..k-1, colours named in order of
// first appearance along vertices 0, 1, ... so each partition appears once.
std::vector<Colouring> proper_colourings(const Graph& h, int k);

// One member of M(H): the graph left by keeping colour classes a and b of
// a proper r-colouring.
struct FamilyMember {
    Colouring colouring;
    int class_a = 0, class_b = 1;
    VertexSet kept;
    Graph graph; // induced(H, kept)
};

// M(H) up to isomorphism, in order of discovery. Throws
// std::invalid_argument when chi(H) < 3 and SearchLimitExceeded past
// max_order.
std::vector<FamilyMember> decomposition_family(const Graph& h, ClassifierOptions options = {});

struct NearAcyclicWitness {
    std::vector<VertexSet> deletions; // r-3 independent sets, possibly empty
    VertexSet independent;            // S
    VertexSet forest;                 // what is left after S
};

// Search for S independent in H with H - S a forest and every odd cycle of
// H meeting S at least twice. Throws std::invalid_argument unless chi = 3.
std::optional<NearAcyclicWitness> near_acyclic_witness(const Graph& h, ClassifierOptions options = {});
bool is_near_acyclic(const Graph& h, ClassifierOptions options = {});

// Delete r-3 independent sets one after another, then ask for a
// near-acyclic remainder. Throws std::invalid_argument unless chi = r.
std::optional<NearAcyclicWitness> r_near_acyclic_witness(const Graph& h, int r, ClassifierOptions options = {});
bool is_r_near_acyclic(const Graph& h, int r, ClassifierOptions options = {});

enum class ThresholdKind { near_acyclic, forest_in_family, no_forest };

struct ThresholdClass {
    int r = 0;
    Rational value;
    ThresholdKind kind = ThresholdKind::no_forest;
    std::optional<NearAcyclicWitness> near_acyclic;
    std::optional<FamilyMember> forest;
};

// (r-3)/(r-2) if H is r-near-acyclic, else (2r-5)/(2r-3) if M(H) holds a
// forest, else (r-2)/(r-1).
ThresholdClass chromatic_threshold(const Graph& h, ClassifierOptions options = {});

// Rechecks a witness against H from scratch: independence, forest and
// odd-cycle conditions, or that the forest member really comes from a
// proper r-colouring. For no_forest it recomputes the family.
bool verify_witness(const Graph& h, const ThresholdClass& t, ClassifierOptions options = {});

// "chi=4, delta_chi=3/5, witness=forest K2 in decomposition family; not 4-near-acyclic"
std::string summary(const ThresholdClass& t);

} // namespace critwin
