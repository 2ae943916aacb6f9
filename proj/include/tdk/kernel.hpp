#pragma once

#include "tdk/decompose.hpp"
#include "tdk/graph.hpp"
#include "tdk/reduce.hpp"

namespace tdk {

enum class KernelVerdict { Kernel, TrivialNo };

struct KernelStats {
    int s_size = 0;
    int y_size = 0;
    int tops = 0;
    int final_n = 0;
    int measured_b = 0;            // largest obstruction the modulator stage hit
    std::vector<int> leaf_counts;  // final leaves per top component, ascending top order
};

struct KernelResult {
    KernelVerdict verdict = KernelVerdict::Kernel;
    Graph reduced_graph;  // the kernel; for TrivialNo, a fixed unsolvable instance
    int k = 0;            // unchanged for Kernel; 0 for TrivialNo
    int eta = 0;
    KernelStats stats;
    std::vector<int> original_ids;       // kernel id -> input id (Kernel verdict only)
    std::vector<VertexSet> certificate;  // disjoint oversized subgraphs (TrivialNo only)
    std::vector<PhiRecord> phi_records;  // leaf accounting from every recursion frame
    ReduceTrace trace;                   // concatenated per-top reduction traces
};

struct KernelOptions {
    bool check_invariants = true;    // per-step checks inside every reduction frame
    bool check_equivalence = false;  // oracle solvability comparison per step
    OracleBudget oracle_budget;
    bool record_snapshots = true;
};

// End-to-end kernelization: decompose, then run the local reduction on every
// top component in ascending order, then compact. The result instance keeps
// the same budget k and is solvable iff the input is; an over-budget
// obstruction packing instead yields TrivialNo with the packing as
// certificate and a fixed unsolvable instance (a clique on eta+2 vertices
// with budget 0) as the graph.
KernelResult kernelize(const Graph& g, int k, int eta, const KernelOptions& options = {});

struct BoundCheck {
    std::string id;
    long long measured = 0;
    long double bound = 0;
    bool pass = true;
};

struct SizeReport {
    std::vector<BoundCheck> checks;
    bool all_pass = true;
    long double c_eta = 0;  // kernel-size constant: the vertex bound at k=1
};

// Measured sizes next to their guarantees: modulator vs B*k, closure vs
// eta*|S|^2*(k+eta), component count, per-component vertex cap, total kernel
// size, and the degree-six polynomial bound c_eta * k^6.
SizeReport size_report(const KernelResult& result);

}  // namespace tdk
