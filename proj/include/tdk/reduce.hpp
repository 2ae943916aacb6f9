#pragma once

#include <optional>

#include "tdk/decomposition.hpp"
#include "tdk/graph.hpp"
#include "tdk/oracles.hpp"

namespace tdk {

// Graph plus forest, with the forest's present-set naming the vertices that
// still exist outside the modulator; everything else is kept isolated so
// snapshots stay id-compatible.
struct ReduceState {
    Graph graph;
    TreedepthDecomposition forest;
};

enum class ReduceStepKind { AddEdge, RemoveEdges, DeleteSubtree, Recurse };

struct ReduceStep {
    ReduceStepKind kind = ReduceStepKind::AddEdge;
    int frame = -1;      // subtree root whose recursion frame took the step
    int u = -1;          // AddEdge endpoint; RemoveEdges: the modulator vertex
    int v = -1;          // AddEdge endpoint; RemoveEdges/DeleteSubtree: child root; Recurse: child
    VertexSet vertices;  // RemoveEdges: endpoints losing an edge to u; DeleteSubtree: erased set
    ReduceState before;
    ReduceState after;
};

struct ReduceTrace {
    std::vector<ReduceStep> steps;
};

// Replays a trace from an initial state; used to test that traces are
// faithful records.
ReduceState apply_trace(ReduceState state, const ReduceTrace& trace);

// Re-derives, on each step's before-state, the conditions that justified the
// step: additions need connectivity >= 3*eta through the frame subtree,
// removals need the covered child neighborhood plus 3*eta qualifying
// siblings, deletions need the clique neighborhood plus 3*eta qualifying
// siblings per neighbor. Also replays the moves and compares against the
// recorded snapshots. Returns the final state; throws CheckError on any
// mismatch. Requires a trace recorded with snapshots.
ReduceState verify_trace(const ReduceState& initial, const ReduceTrace& trace, const VertexSet& s,
                         int eta);

// One JSON object per step, one step per line.
std::string trace_to_json_lines(const ReduceTrace& trace);

struct InvariantCheck {
    std::string id;  // "I" .. "VII"
    bool pass = true;
    std::string detail;
};

struct InvariantReport {
    std::vector<InvariantCheck> checks;
    bool all_pass = true;
    const InvariantCheck* failed() const;
};

// Compares a state against the snapshot its recursion frame started from.
// (I) forest decomposes graph-minus-modulator with height <= eta;
// (II) every subtree inside T_v induces a connected subgraph;
// (III) N(T_v) minus ancestors of v is a clique inside the modulator;
// (IV) the graph diff consists of edge additions inside N(T0_v) ∪ {v}, edge
// removals between the modulator neighbors of T0_v and proper descendants of
// v, and deletions of whole child subtrees of v;
// (V) the forest is a rooted subforest of the snapshot forest;
// (VI) modulator neighborhoods of subtrees never grow;
// (VII) td-deletion solvability is unchanged (oracle, only when k >= 0 and
// the instance fits the budget).
InvariantReport check_invariants(const ReduceState& state0, const ReduceState& state,
                                 const VertexSet& s, int v, int eta, int k = -1,
                                 const OracleBudget& budget = {});

struct PhiBound {
    int height_t0_v = 0;
    int s_degree = 0;
    long long value = 0;  // (2*3eta*2^eta)^height * (s_degree + 1)
};

PhiBound phi(const TreedepthDecomposition& f0, const Graph& g0, const VertexSet& s, int v, int eta);

struct PhiRecord {
    int v = 0;
    int leaves = 0;
    PhiBound bound;
};

struct ReduceOptions {
    bool check_invariants = true;    // per-step frame checks, throws on violation
    bool check_equivalence = false;  // per-step oracle solvability comparison
    int equivalence_k = -1;
    OracleBudget oracle_budget;
    bool record_snapshots = true;    // full state copies inside the trace
};

struct ReduceResult {
    Graph graph;
    TreedepthDecomposition forest;
    ReduceTrace trace;
    std::vector<PhiRecord> phi_records;  // one per recursion frame
    long invariant_checks = 0;
    long equivalence_checks = 0;
};

// Bottom-up local reduction under the subtree of v: saturate short
// connections inside T_v with edge additions, drop covered modulator edges,
// delete covered child subtrees, then recurse into surviving children in
// ascending order. Each frame checks its invariants against its own entry
// snapshot after every mutation and asserts the leaf bound phi(v) on exit.
ReduceResult reduce(const Graph& g, const VertexSet& s, const TreedepthDecomposition& f, int v,
                    int k, int eta, const ReduceOptions& options = {});

}  // namespace tdk
