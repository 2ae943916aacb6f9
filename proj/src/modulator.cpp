#include "tdk/modulator.hpp"

#include "tdk/treedepth.hpp"

namespace tdk {

namespace {

bool td_exceeds(const Graph& g, const VertexSet& vertices, int eta) {
    return !treedepth_at_most(induced_subgraph(g, vertices).graph, eta);
}

}  // namespace

VertexSet shrink_obstruction(const Graph& g, const VertexSet& component, int eta) {
    ensure(is_connected_within(g, component), "obstruction candidate must be connected");
    ensure(td_exceeds(g, component, eta), "obstruction candidate must have treedepth above eta");
    VertexSet h = component;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int v : h) {
            VertexSet rest = set_difference(h, VertexSet{v});
            for (const auto& piece : connected_components_within(g, rest))
                if (td_exceeds(g, piece, eta)) {
                    h = piece;
                    shrunk = true;
                    break;
                }
            if (shrunk) break;
        }
    }
    return h;
}

ModulatorOutcome approx_modulator(const Graph& g, int eta, int k) {
    if (eta < 1) throw InputError("approx_modulator requires eta >= 1");
    if (k < 0) throw InputError("approx_modulator requires k >= 0");
    ModulatorOutcome out;
    ModulatorResult& res = out.result;
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    for (;;) {
        VertexSet rest = set_difference(all, res.modulator);
        VertexSet found;
        for (const auto& comp : connected_components_within(g, rest))
            if (td_exceeds(g, comp, eta)) {
                found = shrink_obstruction(g, comp, eta);
                break;
            }
        if (found.empty()) break;
        for (const auto& earlier : res.obstructions)
            ensure(set_intersection(earlier, found).empty(), "obstructions must be pairwise disjoint");
        res.obstructions.push_back(found);
        res.obstruction_sizes.push_back(static_cast<int>(found.size()));
        res.modulator = set_union(res.modulator, found);
        res.iterations += 1;
        if (res.iterations > k) {
            out.too_costly = true;
            out.certificate = res.obstructions;
            return out;
        }
    }
    ensure(treedepth_at_most(delete_vertices(g, res.modulator), eta),
           "modulator does not reduce treedepth to eta");
    return out;
}

}  // namespace tdk
