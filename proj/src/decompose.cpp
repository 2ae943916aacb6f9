#include "tdk/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tdk/connectivity.hpp"
#include "tdk/modulator.hpp"
#include "tdk/treedepth.hpp"

namespace tdk {

namespace {

// Add {p,q} while some nonadjacent pair has lambda >= threshold; lexicographic
// scan restarting after every addition, so the fixpoint is canonical.
Graph saturate(Graph g, int threshold) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p < g.vertex_count() && !changed; ++p)
            for (int q = p + 1; q < g.vertex_count() && !changed; ++q) {
                if (g.has_edge(p, q)) continue;
                int before = lambda(g, p, q);
                if (before >= threshold) {
                    g = g.with_edge(p, q);
                    ensure(lambda(g, p, q) >= before, "edge addition lowered lambda");
                    changed = true;
                }
            }
    }
    return g;
}

int subtree_td(const Graph& g, const TreedepthDecomposition& f, int u, int eta) {
    auto result = treedepth_exact(induced_subgraph(g, f.subtree(u)).graph, eta);
    ensure(!result.exceeds_cap, "top subtree treedepth exceeds eta");
    return result.value;
}

// Copy a forest into another universe through an id map, assigning parents
// before children so presence checks hold throughout.
void embed_forest(const TreedepthDecomposition& src, TreedepthDecomposition& dst,
                  const std::function<int(int)>& map_id) {
    VertexSet order = src.present_vertices();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return src.depth(a) < src.depth(b); });
    for (int v : order) {
        int p = src.parent(v);
        dst.set_parent(map_id(v),
                       p == TreedepthDecomposition::ROOT ? TreedepthDecomposition::ROOT : map_id(p));
    }
}

}  // namespace

DecomposeOutcome decompose(const Graph& g, int eta, int k) {
    if (eta < 1) throw InputError("decompose requires eta >= 1");
    if (k < 0) throw InputError("decompose requires k >= 0");
    DecomposeOutcome out;

    Graph work = saturate(g, k + eta);

    auto mod = approx_modulator(work, eta, k);
    if (mod.too_costly) {
        out.no_instance = true;
        out.certificate = mod.certificate;
        return out;
    }
    const VertexSet& s = mod.result.modulator;

    VertexSet y0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            int p = s[i], q = s[j];
            if (work.has_edge(p, q)) continue;
            auto sep = min_vertex_separator(work, p, q);
            ensure(sep.value < k + eta, "separator at least k+eta survived saturation");
            y0 = set_union(y0, set_difference(sep.separator, s));
        }

    VertexSet all(work.vertex_count());
    for (int v = 0; v < work.vertex_count(); ++v) all[v] = v;
    VertexSet rest = set_difference(all, s);
    auto sub = induced_subgraph(work, rest);
    auto nice = min_height_nice_decomposition(sub.graph, eta);
    ensure(!nice.exceeds_cap, "graph minus modulator must have treedepth at most eta");
    TreedepthDecomposition forest(work.vertex_count());
    embed_forest(nice.forest, forest, [&](int v) { return sub.old_ids[v]; });

    VertexSet y = y0;
    for (int v : y0) {
        VertexSet anc = forest.ancestors(v);  // nearest-first; sort before set algebra
        std::sort(anc.begin(), anc.end());
        y = set_union(y, anc);
    }

    VertexSet tops;
    for (int u : forest.present_vertices()) {
        if (set_contains(y, u)) continue;
        if (forest.is_root(u) || set_contains(y, forest.parent(u))) tops.push_back(u);
    }

    std::map<int, int> top_td;
    for (int u : tops) top_td[u] = subtree_td(work, forest, u, eta);

    VertexSet alive = all;
    bool removed = true;
    while (removed) {
        removed = false;
        for (int u0 : tops) {
            VertexSet subtree = forest.subtree(u0);
            VertexSet ngb = neighborhood(work, subtree, false);
            if (!is_clique(work, ngb)) continue;
            bool deletable = true;
            for (int v : ngb) {
                int others = 0;
                for (int u : tops) {
                    if (u == u0 || top_td[u] < top_td[u0]) continue;
                    if (set_contains(neighborhood(work, forest.subtree(u), false), v)) ++others;
                }
                if (others < eta + k) {
                    deletable = false;
                    break;
                }
            }
            if (!deletable) continue;
            work = isolate_vertices(work, subtree);
            alive = set_difference(alive, subtree);
            forest.erase_subtree(u0);
            tops = set_difference(tops, VertexSet{u0});
            top_td.erase(u0);
            removed = true;
            break;
        }
    }

    auto compact = induced_subgraph(work, alive);
    std::vector<int> new_id(work.vertex_count(), -1);
    for (size_t i = 0; i < alive.size(); ++i) new_id[alive[i]] = static_cast<int>(i);
    auto remap = [&](const VertexSet& set) {
        VertexSet mapped;
        for (int v : set) mapped.push_back(new_id[v]);
        std::sort(mapped.begin(), mapped.end());
        return mapped;
    };

    DecompositionBundle& bundle = out.bundle;
    bundle.graph = compact.graph;
    bundle.modulator = remap(s);
    bundle.separator_closure = remap(y);
    bundle.tops = remap(tops);
    bundle.k = k;
    bundle.eta = eta;
    bundle.original_ids = compact.old_ids;
    bundle.obstruction_sizes = mod.result.obstruction_sizes;
    bundle.forest = TreedepthDecomposition(static_cast<int>(alive.size()));
    embed_forest(forest, bundle.forest, [&](int v) { return new_id[v]; });
    return out;
}

BundleReport check_bundle(const DecompositionBundle& bundle) {
    BundleReport report;
    auto add = [&](const std::string& id, bool pass, const std::string& detail) {
        report.checks.push_back({id, pass, detail});
        if (!pass) report.all_pass = false;
    };
    const Graph& g = bundle.graph;
    const VertexSet& s = bundle.modulator;
    const VertexSet& y = bundle.separator_closure;
    long k = bundle.k, eta = bundle.eta;

    long big_b = 0;
    for (int size : bundle.obstruction_sizes) big_b = std::max(big_b, static_cast<long>(size));
    long s_bound = big_b * k;
    add("2", static_cast<long>(s.size()) <= s_bound,
        "|S|=" + std::to_string(s.size()) + " vs B(eta)*k=" + std::to_string(s_bound));

    long s_size = static_cast<long>(s.size());
    long y_bound = eta * s_size * s_size * (k + eta);
    add("3", static_cast<long>(y.size()) <= y_bound,
        "|Y|=" + std::to_string(y.size()) + " vs eta*|S|^2*(k+eta)=" + std::to_string(y_bound));

    bool connected_ok = true;
    std::string connected_detail = "every non-Y subtree induces a connected subgraph";
    for (int u : bundle.forest.present_vertices()) {
        if (set_contains(y, u)) continue;
        if (!is_connected_within(g, bundle.forest.subtree(u))) {
            connected_ok = false;
            connected_detail = "subtree of vertex " + std::to_string(u) + " is disconnected";
            break;
        }
    }
    add("4", connected_ok, connected_detail);

    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    VertexSet outside = set_difference(all, set_union(s, y));
    auto comps = connected_components_within(g, outside);
    std::vector<VertexSet> top_subtrees;
    for (int t : bundle.tops) top_subtrees.push_back(bundle.forest.subtree(t));
    std::sort(top_subtrees.begin(), top_subtrees.end());
    std::vector<VertexSet> comps_sorted = comps;
    std::sort(comps_sorted.begin(), comps_sorted.end());
    add("5", comps_sorted == top_subtrees,
        std::to_string(comps.size()) + " components vs " + std::to_string(top_subtrees.size()) +
            " top subtrees");

    bool clique_ok = true;
    std::string clique_detail = "every component neighborhood meets S in a clique";
    for (const auto& comp : comps) {
        VertexSet meet = set_intersection(neighborhood(g, comp, false), s);
        if (!is_clique(g, meet)) {
            clique_ok = false;
            clique_detail = "component at vertex " + std::to_string(comp.front()) +
                            " has a non-clique neighborhood in S";
            break;
        }
    }
    add("6", clique_ok, clique_detail);

    long y_size = static_cast<long>(y.size());
    long comp_bound = (s_size + y_size + s_size * s_size + s_size * y_size + eta * y_size) * (eta + k);
    add("7", static_cast<long>(comps.size()) <= comp_bound,
        std::to_string(comps.size()) + " components vs bound " + std::to_string(comp_bound));
    return report;
}

std::optional<NearCliqueWitness> nearly_clique_separated(const Graph& g, const VertexSet& s, int ell) {
    check_vertex_set(g, s);
    if (ell < 0) throw InputError("nearly_clique_separated requires ell >= 0");
    VertexSet nb = neighborhood(g, s, false);
    int m = static_cast<int>(nb.size());
    std::optional<NearCliqueWitness> found;
    VertexSet picked;
    std::function<bool(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) {
            VertexSet q;
            for (int i : picked) q.push_back(nb[i]);
            VertexSet rest = set_difference(nb, q);
            if (is_clique(g, rest)) {
                found = NearCliqueWitness{q, rest};
                return true;
            }
            return false;
        }
        for (int i = start; i <= m - remaining; ++i) {
            picked.push_back(i);
            if (rec(i + 1, remaining - 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= std::min(ell, m); ++size)
        if (rec(0, size)) break;
    return found;
}

}  // namespace tdk
