#pragma once

#include "tdk/decomposition.hpp"
#include "tdk/graph.hpp"

namespace tdk {

struct TdResult {
    bool exceeds_cap = false;
    int value = 0;  // meaningful only when exceeds_cap is false

    bool operator==(const TdResult&) const = default;
};

// Exact treedepth with a cutoff: Value(t) iff td(g) = t <= cap, ExceedsCap
// otherwise. Disconnected graphs take the maximum over components. Components
// larger than 64 vertices are rejected.
TdResult treedepth_exact(const Graph& g, int cap);

// Convenience for the frequent "is td(g) <= cap" question.
bool treedepth_at_most(const Graph& g, int cap);

struct NiceDecompositionResult {
    bool exceeds_cap = false;
    TreedepthDecomposition forest;
};

// A nice decomposition of height exactly td(g), or ExceedsCap. Argmin ties
// break toward the lowest vertex id, so the output is canonical.
NiceDecompositionResult min_height_nice_decomposition(const Graph& g, int cap);

// Re-hangs subtrees that have no edge to their parent until every subtree
// induces a connected subgraph. Never increases any vertex's depth.
TreedepthDecomposition make_nice(TreedepthDecomposition f, const Graph& g);

}  // namespace tdk
