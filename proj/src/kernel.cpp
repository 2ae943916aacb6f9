#include "tdk/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace tdk {

namespace {

// Per-component vertex cap: height times the leaf bound with the full
// modulator as the neighborhood.
long double per_component_cap(int eta, long double s_size) {
    long double base = 3.0L * eta * std::pow(2.0L, eta + 1);
    return eta * std::pow(base, eta) * (s_size + 1);
}

// The kernel vertex bound as a function of k, assembled from the measured
// obstruction ratio b: modulator, closure, component count, and per-component
// cap, each replaced by its guarantee.
long double vertex_bound(int eta, long double b, long double k) {
    long double s = b * k;
    long double y = eta * s * s * (k + eta);
    long double comps = (s + y + s * s + s * y + eta * y) * (eta + k);
    return s + y + comps * per_component_cap(eta, s);
}

}  // namespace

KernelResult kernelize(const Graph& g, int k, int eta, const KernelOptions& options) {
    if (eta < 1) throw InputError("kernelize requires eta >= 1");
    if (k < 0) throw InputError("kernelize requires k >= 0");

    KernelResult result;
    result.eta = eta;

    DecomposeOutcome outcome = decompose(g, eta, k);
    if (outcome.no_instance) {
        result.verdict = KernelVerdict::TrivialNo;
        result.certificate = outcome.certificate;
        result.reduced_graph = complete_graph(eta + 2);
        result.k = 0;
        result.stats.final_n = result.reduced_graph.vertex_count();
        for (const VertexSet& obs : outcome.certificate)
            result.stats.measured_b =
                std::max(result.stats.measured_b, static_cast<int>(obs.size()));
        return result;
    }

    DecompositionBundle& bundle = outcome.bundle;
    BundleReport bundle_report = check_bundle(bundle);
    ensure(bundle_report.all_pass, "decomposition bundle failed its structural checks");

    result.verdict = KernelVerdict::Kernel;
    result.k = k;
    result.stats.s_size = static_cast<int>(bundle.modulator.size());
    result.stats.y_size = static_cast<int>(bundle.separator_closure.size());
    result.stats.tops = static_cast<int>(bundle.tops.size());
    for (int size : bundle.obstruction_sizes)
        result.stats.measured_b = std::max(result.stats.measured_b, size);

    ReduceOptions reduce_options;
    reduce_options.check_invariants = options.check_invariants;
    reduce_options.check_equivalence = options.check_equivalence;
    reduce_options.equivalence_k = k;
    reduce_options.oracle_budget = options.oracle_budget;
    reduce_options.record_snapshots = options.record_snapshots;

    Graph work = bundle.graph;
    TreedepthDecomposition forest = bundle.forest;
    for (int top : bundle.tops) {
        ReduceResult reduced = reduce(work, bundle.modulator, forest, top, k, eta, reduce_options);
        work = std::move(reduced.graph);
        forest = std::move(reduced.forest);
        for (ReduceStep& step : reduced.trace.steps)
            result.trace.steps.push_back(std::move(step));
        for (const PhiRecord& record : reduced.phi_records) {
            if (record.v == top) result.stats.leaf_counts.push_back(record.leaves);
            result.phi_records.push_back(record);
        }
    }

    VertexSet alive = set_union(forest.present_vertices(), bundle.modulator);
    InducedSubgraph compact = induced_subgraph(work, alive);
    result.reduced_graph = compact.graph;
    result.stats.final_n = result.reduced_graph.vertex_count();
    result.original_ids.reserve(compact.old_ids.size());
    for (int old_id : compact.old_ids) result.original_ids.push_back(bundle.original_ids.at(old_id));

    SizeReport report = size_report(result);
    for (const BoundCheck& check : report.checks)
        ensure(check.pass, "kernel size bound '" + check.id + "' violated: measured " +
                               std::to_string(check.measured) + " exceeds " +
                               std::to_string(static_cast<long long>(check.bound)));
    return result;
}

SizeReport size_report(const KernelResult& result) {
    if (result.verdict != KernelVerdict::Kernel)
        throw InputError("size_report requires a Kernel verdict");
    const int eta = result.eta;
    const long long s = result.stats.s_size;
    const long long y = result.stats.y_size;
    const long long tops = result.stats.tops;
    const long long k = result.k;
    const long long b = result.stats.measured_b;

    SizeReport report;
    auto add = [&](std::string id, long long measured, long double bound) {
        bool pass = static_cast<long double>(measured) <= bound;
        report.all_pass = report.all_pass && pass;
        report.checks.push_back({std::move(id), measured, bound, pass});
    };

    add("modulator", s, static_cast<long double>(b) * k);
    add("separator-closure", y, static_cast<long double>(eta) * s * s * (k + eta));
    add("component-count", tops,
        static_cast<long double>(s + y + s * s + s * y + eta * y) * (eta + k));

    const long double cap = per_component_cap(eta, static_cast<long double>(s));
    long long largest_component = 0;
    // The kernel graph is S and Y plus the surviving top subtrees; bound the
    // latter by the per-component cap via the total.
    add("kernel-size", result.stats.final_n, s + y + static_cast<long double>(tops) * cap);
    for (int leaves : result.stats.leaf_counts)
        largest_component = std::max(largest_component, static_cast<long long>(leaves));
    add("component-leaves", largest_component,
        std::pow(3.0L * eta * std::pow(2.0L, eta + 1), eta) * (s + 1));

    report.c_eta = vertex_bound(eta, static_cast<long double>(b), 1.0L);
    add("polynomial", result.stats.final_n,
        report.c_eta * std::pow(static_cast<long double>(k), 6.0L));
    return report;
}

}  // namespace tdk
