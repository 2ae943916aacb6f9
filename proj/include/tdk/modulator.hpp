#pragma once

#include "tdk/graph.hpp"

namespace tdk {

struct ModulatorResult {
    VertexSet modulator;
    int iterations = 0;                   // number of disjoint obstructions hit
    std::vector<int> obstruction_sizes;
    std::vector<VertexSet> obstructions;  // the certificate trail
};

struct ModulatorOutcome {
    bool too_costly = false;
    ModulatorResult result;  // meaningful when !too_costly
    // When too_costly: k+1 pairwise disjoint connected subgraphs of
    // treedepth > eta, witnessing that no modulator of size k exists.
    std::vector<VertexSet> certificate;
};

// Obstruction hitting: while some component of g - S has treedepth > eta,
// shrink it to a vertex-minimal connected induced subgraph of treedepth
// > eta and move all its vertices into S. The obstructions found are
// pairwise disjoint, so finding more than k of them proves a NO instance.
ModulatorOutcome approx_modulator(const Graph& g, int eta, int k);

// Vertex-minimal connected induced subgraph of g[component] with treedepth
// exceeding eta. Deletion attempts proceed in ascending vertex id; when a
// deletion leaves several oversized components, the one with the smallest
// minimum vertex is kept.
VertexSet shrink_obstruction(const Graph& g, const VertexSet& component, int eta);

}  // namespace tdk
