#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cheshire/core.hpp"

// The three experimentally testable claims about the pre- and postselected
// photon, the pairwise inferences, the 9-state hexagram orthogonality graph
// with its three measurement contexts, exhaustive noncontextual-assignment
// search, and the noncontextuality inequality under depolarizing noise.

namespace cheshire::contextuality {

struct Claim {
    int id;                          // 1..3
    std::string prohibited_property; // "{2}", "{V}", "{Phi}"
    std::array<std::string, 2> hexagon_pair;
    std::array<std::pair<std::string, std::string>, 2> zero_overlaps;  // (bra, ket)
    std::vector<std::string> eliminated_product_states;
};

const std::array<Claim, 3>& claims();

struct ClaimProbabilities {
    double d2;        // variant a
    double v_plus;    // variant b
    double phi_plus;  // variant c, inference factor applied
    double d_plus;    // baseline
};

ClaimProbabilities claims_probabilities(const Ket& input);
ClaimProbabilities claims_probabilities(const Operator& density);

// (1-p) |E_CC><E_CC| + p/4 * identity
Operator depolarized_preselection(double p);

// Intersection of the complements of the claims' eliminated sets, over the
// four product states {H1, H2, V1, V2}.
std::vector<std::string> infer(const std::set<int>& claim_ids);

struct ContextGraph {
    std::vector<std::string> states;  // inner triangle first, then hexagon
    std::vector<Ket> kets;
    std::vector<std::pair<int, int>> edges;          // orthogonality, i < j
    std::vector<std::array<int, 4>> contexts;        // mutually orthogonal 4-sets
};

// Contexts are discovered by brute force over all 4-subsets of the 9 states.
ContextGraph build_context_graph();

// A 0/1 assignment over graph.states, encoded as a bitmask in state order.
using Assignment = std::uint16_t;

struct SearchResult {
    std::vector<Assignment> valid;  // ascending bitmask order
};

// Exhaustive search over all 2^9 assignments for exclusivity (no two
// orthogonal states valued 1) and completeness (exactly one 1 per context).
// States named in forced_zero must be assigned 0.
SearchResult search_assignments(const ContextGraph& graph,
                                const std::vector<std::string>& forced_zero = {});

// forced_zero = all six hexagon states (the three Claims).
SearchResult search_assignments_forbid_hexagon(const ContextGraph& graph);

// [P(V+) + P(D2) + P(Phi+)] - P(D+) on the depolarized preselection; negative
// means the noncontextual bound is violated.
double inequality_margin(double p);

// Zero crossing of the margin, by bisection to 1e-10.
double violation_threshold();

}  // namespace cheshire::contextuality
