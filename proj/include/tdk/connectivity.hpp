#pragma once

#include "tdk/graph.hpp"

namespace tdk {

struct SeparatorResult {
    VertexSet separator;  // disjoint from both terminals
    int value = 0;        // equals lambda(g, p, q)
};

// Maximum number of internally vertex-disjoint u-v paths; a direct edge
// counts as one path. Computed by unit-capacity max-flow on the vertex-split
// digraph with breadth-first augmentation, so results are deterministic.
int lambda(const Graph& g, int u, int v);

// lambda of g[{u,v} ∪ allowed]; u and v must not belong to allowed.
int lambda_within(const Graph& g, int u, int v, const VertexSet& allowed);

// Minimum-cardinality vertex set separating the nonadjacent pair p, q,
// extracted from the source side of the max-flow residual graph (so it is
// the separator closest to p). |separator| == lambda(g, p, q).
SeparatorResult min_vertex_separator(const Graph& g, int p, int q);

}  // namespace tdk
