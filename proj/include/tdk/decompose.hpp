#pragma once

#include <optional>

#include "tdk/decomposition.hpp"
#include "tdk/graph.hpp"

namespace tdk {

struct DecompositionBundle {
    Graph graph;                     // G', compacted ids
    VertexSet modulator;             // S
    VertexSet separator_closure;     // Y, ancestor-closed, disjoint from S
    TreedepthDecomposition forest;   // over V(G') \ S, height <= eta
    VertexSet tops;                  // topmost forest nodes outside Y
    int k = 0;
    int eta = 0;
    std::vector<int> original_ids;   // bundle id -> input id
    std::vector<int> obstruction_sizes;  // sizes hit by the modulator stage
};

struct DecomposeOutcome {
    bool no_instance = false;
    std::vector<VertexSet> certificate;  // disjoint obstructions when no_instance
    DecompositionBundle bundle;          // meaningful otherwise
};

// Pipeline front end: saturate connectivity (add {p,q} while lambda >= k+eta),
// hit obstructions into S, separate nonadjacent modulator pairs into Y,
// decompose G-S, close Y under ancestors, and delete top subtrees whose
// clique neighborhoods are covered eta+k times over by other tops.
DecomposeOutcome decompose(const Graph& g, int eta, int k);

struct PropertyCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct BundleReport {
    std::vector<PropertyCheck> checks;
    bool all_pass = true;
};

// Structural output guarantees of decompose, numbered (2) through (7):
// modulator size, separator-closure size, subtree connectivity outside Y,
// components of G'-(S∪Y) being exactly the top subtrees, clique component
// neighborhoods in S, and the component count bound.
BundleReport check_bundle(const DecompositionBundle& bundle);

struct NearCliqueWitness {
    VertexSet q_set;       // |q_set| <= ell
    VertexSet clique_part; // N_G(S) \ q_set, a clique
};

// Smallest Q ⊆ N_G(s) with |Q| <= ell whose removal from N_G(s) leaves a
// clique; found by size-then-lex subset enumeration.
std::optional<NearCliqueWitness> nearly_clique_separated(const Graph& g, const VertexSet& s, int ell);

}  // namespace tdk
