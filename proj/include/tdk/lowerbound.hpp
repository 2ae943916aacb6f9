#pragma once

#include <optional>

#include "tdk/graph.hpp"
#include "tdk/oracles.hpp"

namespace tdk {

// Exact d-uniform set cover: choose exactly k pairwise-disjoint family sets
// covering the universe [0, n).
struct SetCoverInstance {
    int n = 0;
    int d = 0;
    int k = 0;
    std::vector<VertexSet> family;  // sorted d-subsets of [0, n), no duplicates
};

void validate_instance(const SetCoverInstance& inst);

struct VertexRole {
    enum class Kind { Matrix, Dummy, Enforcer };
    Kind kind = Kind::Matrix;
    int i = -1;     // row (Matrix, Dummy)
    int j = -1;     // column (Matrix, Enforcer)
    int index = -1; // position within the row's dummy clique
    VertexSet x;    // the missing set guarded by an enforcer
};

// The transformation output: an n-by-k matrix of row-and-column cliques, a
// dummy clique glued to every row, and one enforcer per column per d-subset
// missing from the family, pendant on that column's copy of the subset.
// Degenerate budgets (k*d != n) produce a clique on d+1 vertices with a zero
// deletion budget instead.
struct GadgetGraph {
    Graph graph;
    int k_prime = 0;
    std::vector<VertexRole> roles;  // one per vertex
    int n = 0, d = 0, k = 0;
    bool degenerate = false;        // the K_{d+1} branch
    VertexSet explicit_cover;       // matrix plus dummies; a vertex cover

    int matrix_id(int i, int j) const;  // row i, column j
};

// Claimed equivalence: the instance has an exact cover iff k_prime deletions
// can make the gadget free of (d+1)-clique minors.
GadgetGraph construct(const SetCoverInstance& inst);

// The deletion set induced by an exact cover: assign the cover's sets to
// columns in ascending order and delete every matrix vertex whose row is
// outside its column's set. Size is exactly k*(n-d).
VertexSet canonical_solution(const GadgetGraph& gadget, const std::vector<VertexSet>& cover);

// Complete branching search: does deleting at most max_size vertices make g
// free of t-clique minors? Branches over the vertices of a found minor
// model, so every minimum solution appears as a leaf; prunes with greedy
// disjoint-model packing.
bool exists_deletion_to_minor_free(const Graph& g, int t, int max_size,
                                   const OracleBudget& budget = {});

// All minimum-cardinality deletion sets of size at most max_size, from the
// same complete branching (deduplicated, filtered to the minimum size found).
std::vector<VertexSet> enumerate_min_deletion_sets(const Graph& g, int t, int max_size,
                                                   const OracleBudget& budget = {});

struct GadgetVerdict {
    bool confirmed = false;
    bool cover_exists = false;
    bool deletion_exists = false;
    std::string detail;
};

// Bidirectional check on one instance: the set-cover oracle's answer must
// match the deletion search on the gadget, and when a cover exists the
// canonical deletion set must leave a graph with no (d+1)-clique minor, no
// simple path on 4d vertices, and only simplicial low-degree vertices
// outside the kept column sets.
GadgetVerdict verify_gadget(const SetCoverInstance& inst, const OracleBudget& budget = {});

}  // namespace tdk
