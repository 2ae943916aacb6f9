#include "tdk/reduce.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tdk/connectivity.hpp"
#include "tdk/treedepth.hpp"

namespace tdk {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList edge_difference(const EdgeList& a, const EdgeList& b) {
    EdgeList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string join_ids(const VertexSet& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os.str();
}

void add_check(InvariantReport& rep, const char* id, bool pass, std::string detail) {
    rep.checks.push_back({id, pass, std::move(detail)});
    rep.all_pass = rep.all_pass && pass;
}

}  // namespace

const InvariantCheck* InvariantReport::failed() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

InvariantReport check_invariants(const ReduceState& state0, const ReduceState& state,
                                 const VertexSet& s, int v, int eta, int k,
                                 const OracleBudget& budget) {
    const Graph& g0 = state0.graph;
    const Graph& g = state.graph;
    const TreedepthDecomposition& f0 = state0.forest;
    const TreedepthDecomposition& f = state.forest;
    if (g0.vertex_count() != g.vertex_count() || f0.universe_size() != g0.vertex_count() ||
        f.universe_size() != g.vertex_count())
        throw InputError("invariant check requires states over one vertex universe");
    if (!f0.present(v) || !f.present(v))
        throw InputError("invariant check requires v present in both forests");

    InvariantReport rep;

    {  // (I) forest decomposes the graph minus the modulator, height <= eta
        bool pass = true;
        std::string detail = "ok";
        if (f.height() > eta) {
            pass = false;
            detail = "forest height " + std::to_string(f.height()) + " exceeds " + std::to_string(eta);
        }
        if (pass)
            for (int w : f.present_vertices())
                if (set_contains(s, w)) {
                    pass = false;
                    detail = "modulator vertex " + std::to_string(w) + " present in the forest";
                    break;
                }
        if (pass)
            for (const auto& [a, b] : g.edges()) {
                if (set_contains(s, a) || set_contains(s, b)) continue;
                if (!f.present(a) || !f.present(b)) {
                    pass = false;
                    detail = "edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} touches a vertex outside the forest";
                    break;
                }
                if (!ancestor_related(f, a, b)) {
                    pass = false;
                    detail = "edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} is not ancestor-related";
                    break;
                }
            }
        add_check(rep, "I", pass, std::move(detail));
    }

    const VertexSet t_v = f.subtree(v);

    {  // (II) every subtree inside T_v induces a connected subgraph
        bool pass = true;
        std::string detail = "ok";
        for (int u : t_v)
            if (!is_connected_within(g, f.subtree(u))) {
                pass = false;
                detail = "subtree of " + std::to_string(u) + " is disconnected";
                break;
            }
        add_check(rep, "II", pass, std::move(detail));
    }

    {  // (III) N(T_v) minus ancestors of v is a clique inside the modulator
        VertexSet anc = f.ancestors(v);  // nearest-first; sort before set algebra
        std::sort(anc.begin(), anc.end());
        VertexSet rest = set_difference(neighborhood(g, t_v, false), anc);
        bool pass = true;
        std::string detail = "ok";
        if (!is_subset(rest, s)) {
            pass = false;
            detail = "non-ancestor neighbors {" + join_ids(rest) + "} leave the modulator";
        } else if (!is_clique(g, rest)) {
            pass = false;
            detail = "non-ancestor modulator neighbors {" + join_ids(rest) + "} are not a clique";
        }
        add_check(rep, "III", pass, std::move(detail));
    }

    const VertexSet t0_v = f0.subtree(v);
    const VertexSet nb0 = neighborhood(g0, t0_v, false);
    const VertexSet deleted = set_difference(f0.present_vertices(), f.present_vertices());

    {  // (IV) the graph diff decomposes into the three permitted move kinds
        bool pass = true;
        std::string detail = "ok";
        VertexSet allowed_add = set_union(nb0, VertexSet{v});
        for (const auto& [a, b] : edge_difference(g.edges(), g0.edges())) {
            if (set_contains(allowed_add, a) && set_contains(allowed_add, b)) continue;
            pass = false;
            detail = "added edge {" + std::to_string(a) + "," + std::to_string(b) +
                     "} leaves the permitted neighborhood";
            break;
        }
        const VertexSet nb0_s = set_intersection(nb0, s);
        if (pass)
            for (const auto& [a, b] : edge_difference(g0.edges(), g.edges())) {
                if (set_contains(deleted, a) || set_contains(deleted, b)) continue;
                int sv = -1, tv = -1;
                if (set_contains(nb0_s, a)) {
                    sv = a;
                    tv = b;
                } else if (set_contains(nb0_s, b)) {
                    sv = b;
                    tv = a;
                }
                if (sv < 0 || tv == v || !set_contains(t0_v, tv)) {
                    pass = false;
                    detail = "removed edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} is not a modulator-to-descendant edge";
                    break;
                }
            }
        if (pass)
            for (int d : deleted) {
                for (int c : f0.children(d))
                    if (!set_contains(deleted, c)) {
                        pass = false;
                        detail = "vertex " + std::to_string(d) +
                                 " deleted without its child " + std::to_string(c);
                        break;
                    }
                if (!pass) break;
                int top = d;
                while (!f0.is_root(top) && set_contains(deleted, f0.parent(top))) top = f0.parent(top);
                if (f0.is_root(top) || f0.parent(top) != v) {
                    pass = false;
                    detail = "deleted vertex " + std::to_string(d) +
                             " is not inside a deleted child subtree of " + std::to_string(v);
                    break;
                }
            }
        add_check(rep, "IV", pass, std::move(detail));
    }

    {  // (V) rooted subforest of the snapshot forest
        bool pass = true;
        std::string detail = "ok";
        for (int u : f.present_vertices()) {
            if (!f0.present(u)) {
                pass = false;
                detail = "vertex " + std::to_string(u) + " appeared in the forest";
                break;
            }
            if (f.parent(u) != f0.parent(u)) {
                pass = false;
                detail = "vertex " + std::to_string(u) + " changed parent";
                break;
            }
        }
        add_check(rep, "V", pass, std::move(detail));
    }

    {  // (VI) modulator neighborhoods of subtrees never grow
        bool pass = true;
        std::string detail = "ok";
        for (int u : t_v) {
            VertexSet now = set_intersection(neighborhood(g, f.subtree(u), false), s);
            if (!is_subset(now, neighborhood(g0, f0.subtree(u), false))) {
                pass = false;
                detail = "subtree of " + std::to_string(u) + " gained a modulator neighbor";
                break;
            }
        }
        add_check(rep, "VI", pass, std::move(detail));
    }

    {  // (VII) oracle solvability unchanged, when requested and affordable
        if (k < 0) {
            add_check(rep, "VII", true, "skipped (not requested)");
        } else {
            VertexSet alive0 = set_union(f0.present_vertices(), s);
            if (static_cast<int>(alive0.size()) > budget.max_vertices) {
                add_check(rep, "VII", true, "skipped (beyond oracle budget)");
            } else {
                VertexSet alive = set_union(f.present_vertices(), s);
                bool solvable0 =
                    exact_td_deletion(induced_subgraph(g0, alive0).graph, eta, k, budget).has_value();
                bool solvable =
                    exact_td_deletion(induced_subgraph(g, alive).graph, eta, k, budget).has_value();
                add_check(rep, "VII", solvable0 == solvable,
                          solvable0 == solvable ? "equivalent" : "solvability diverged");
            }
        }
    }

    return rep;
}

PhiBound phi(const TreedepthDecomposition& f0, const Graph& g0, const VertexSet& s, int v,
             int eta) {
    if (!f0.present(v)) throw InputError("phi requires v to be present in the forest");
    PhiBound out;
    out.height_t0_v = f0.subtree_height(v);
    out.s_degree =
        static_cast<int>(set_intersection(neighborhood(g0, f0.subtree(v), false), s).size());
    long long base = 2LL * (3LL * eta) * (1LL << eta);
    long long value = 1;
    for (int i = 0; i < out.height_t0_v; ++i) value *= base;
    out.value = value * (out.s_degree + 1);
    return out;
}

ReduceState apply_trace(ReduceState state, const ReduceTrace& trace) {
    for (const ReduceStep& step : trace.steps) {
        switch (step.kind) {
            case ReduceStepKind::AddEdge:
                state.graph = state.graph.with_edge(step.u, step.v);
                break;
            case ReduceStepKind::RemoveEdges:
                for (int t : step.vertices) state.graph = state.graph.without_edge(step.u, t);
                break;
            case ReduceStepKind::DeleteSubtree:
                state.graph = isolate_vertices(state.graph, step.vertices);
                state.forest.erase_subtree(step.v);
                break;
            case ReduceStepKind::Recurse:
                break;
        }
    }
    return state;
}

namespace {

// Treedepth of the subgraph induced by a child subtree; capped by eta, which
// invariant (I) guarantees is never exceeded.
int subtree_td(const Graph& g, const TreedepthDecomposition& f, int c, int eta) {
    TdResult r = treedepth_exact(induced_subgraph(g, f.subtree(c)).graph, eta);
    ensure(!r.exceeds_cap, "child subtree treedepth exceeds the height budget");
    return r.value;
}

struct ReduceCtx {
    VertexSet s;
    int k = 0;
    int eta = 1;
    ReduceOptions opt;
    ReduceResult* res = nullptr;
    Graph g;
    TreedepthDecomposition f;
};

void record_step(ReduceCtx& ctx, ReduceStep step, const ReduceState* before) {
    if (ctx.opt.record_snapshots) {
        step.before = *before;
        step.after = {ctx.g, ctx.f};
    }
    ctx.res->trace.steps.push_back(std::move(step));
}

void check_step(ReduceCtx& ctx, const ReduceState& snap, int v) {
    if (!ctx.opt.check_invariants) return;
    int eq_k = ctx.opt.check_equivalence ? ctx.opt.equivalence_k : -1;
    InvariantReport rep =
        check_invariants(snap, {ctx.g, ctx.f}, ctx.s, v, ctx.eta, eq_k, ctx.opt.oracle_budget);
    ++ctx.res->invariant_checks;
    for (const InvariantCheck& c : rep.checks)
        if (c.id == "VII" && c.detail.rfind("skipped", 0) != 0) ++ctx.res->equivalence_checks;
    if (!rep.all_pass) {
        const InvariantCheck* bad = rep.failed();
        throw CheckError("invariant (" + bad->id + ") violated while reducing at vertex " +
                         std::to_string(v) + ": " + bad->detail);
    }
}

void run_frame(ReduceCtx& ctx, int v) {
    ensure(ctx.f.present(v), "reduce frame root must be present in the forest");
    const ReduceState snap{ctx.g, ctx.f};

    if (ctx.opt.check_invariants) {
        InvariantReport rep = check_invariants(snap, snap, ctx.s, v, ctx.eta);
        ++ctx.res->invariant_checks;
        if (!rep.all_pass) {
            const InvariantCheck* bad = rep.failed();
            throw InputError("reduce entry state violates invariant (" + bad->id +
                             ") at vertex " + std::to_string(v) + ": " + bad->detail);
        }
    }

    // Child subtrees and their induced subgraphs are untouched by this
    // frame's own edge moves, so their treedepths are cached for the frame.
    std::map<int, int> child_td;
    auto td_of_child = [&](int c) {
        auto it = child_td.find(c);
        if (it == child_td.end())
            it = child_td.emplace(c, subtree_td(ctx.g, ctx.f, c, ctx.eta)).first;
        return it->second;
    };
    const int threshold = 3 * ctx.eta;

    // Saturate well-connected nonadjacent pairs around T_v with edges.
    bool changed = true;
    while (changed) {
        changed = false;
        const VertexSet t_v = ctx.f.subtree(v);
        const VertexSet scope = set_union(neighborhood(ctx.g, t_v, false), VertexSet{v});
        for (size_t i = 0; i < scope.size() && !changed; ++i)
            for (size_t j = i + 1; j < scope.size() && !changed; ++j) {
                const int p = scope[i], q = scope[j];
                if (ctx.g.has_edge(p, q)) continue;
                if (lambda_within(ctx.g, p, q, set_difference(t_v, VertexSet{p, q})) < threshold)
                    continue;
                ReduceStep step;
                step.kind = ReduceStepKind::AddEdge;
                step.frame = v;
                step.u = p;
                step.v = q;
                ReduceState pre;
                if (ctx.opt.record_snapshots) pre = {ctx.g, ctx.f};
                ctx.g = ctx.g.with_edge(p, q);
                record_step(ctx, std::move(step), &pre);
                check_step(ctx, snap, v);
                changed = true;
            }
    }

    // Drop modulator edges into a child whose neighborhood one modulator
    // vertex covers, provided enough matching siblings stay adjacent to it.
    changed = true;
    while (changed) {
        changed = false;
        const VertexSet kids = ctx.f.children(v);
        for (int c0 : kids) {
            const VertexSet t_c0 = ctx.f.subtree(c0);
            const VertexSet nb_c0 = neighborhood(ctx.g, t_c0, false);
            int chosen = -1;
            for (int sv : set_intersection(nb_c0, ctx.s)) {
                if (!is_subset(nb_c0, neighborhood(ctx.g, VertexSet{sv}, true))) continue;
                int matching = 0;
                for (int c : kids) {
                    if (c == c0) continue;
                    if (set_intersection(ctx.g.neighbors(sv), ctx.f.subtree(c)).empty()) continue;
                    if (td_of_child(c) >= td_of_child(c0)) ++matching;
                }
                if (matching >= threshold) {
                    chosen = sv;
                    break;
                }
            }
            if (chosen < 0) continue;
            ReduceStep step;
            step.kind = ReduceStepKind::RemoveEdges;
            step.frame = v;
            step.u = chosen;
            step.v = c0;
            step.vertices = set_intersection(ctx.g.neighbors(chosen), t_c0);
            ensure(!step.vertices.empty(), "edge removal step must remove at least one edge");
            ReduceState pre;
            if (ctx.opt.record_snapshots) pre = {ctx.g, ctx.f};
            for (int t : step.vertices) ctx.g = ctx.g.without_edge(chosen, t);
            record_step(ctx, std::move(step), &pre);
            check_step(ctx, snap, v);
            changed = true;
            break;
        }
    }

    // Delete a child subtree whose neighborhood is a clique of vertices that
    // all see enough matching siblings.
    changed = true;
    while (changed) {
        changed = false;
        const VertexSet kids = ctx.f.children(v);
        for (int c_star : kids) {
            const VertexSet t_c = ctx.f.subtree(c_star);
            const VertexSet nb = neighborhood(ctx.g, t_c, false);
            if (!is_clique(ctx.g, nb)) continue;
            bool covered = true;
            for (int w : nb) {
                int matching = 0;
                for (int c : kids) {
                    if (c == c_star) continue;
                    if (set_intersection(ctx.g.neighbors(w), ctx.f.subtree(c)).empty()) continue;
                    if (td_of_child(c) >= td_of_child(c_star)) ++matching;
                }
                if (matching < threshold) {
                    covered = false;
                    break;
                }
            }
            if (!covered) continue;
            ReduceStep step;
            step.kind = ReduceStepKind::DeleteSubtree;
            step.frame = v;
            step.v = c_star;
            step.vertices = t_c;
            ReduceState pre;
            if (ctx.opt.record_snapshots) pre = {ctx.g, ctx.f};
            ctx.g = isolate_vertices(ctx.g, t_c);
            ctx.f.erase_subtree(c_star);
            child_td.erase(c_star);
            record_step(ctx, std::move(step), &pre);
            check_step(ctx, snap, v);
            changed = true;
            break;
        }
    }

    {  // Recursion-time saturation: no nonadjacent pair stays well connected.
        const VertexSet t_v = ctx.f.subtree(v);
        const VertexSet scope = set_union(neighborhood(ctx.g, t_v, false), VertexSet{v});
        for (size_t i = 0; i < scope.size(); ++i)
            for (size_t j = i + 1; j < scope.size(); ++j) {
                const int p = scope[i], q = scope[j];
                if (ctx.g.has_edge(p, q)) continue;
                ensure(lambda_within(ctx.g, p, q, set_difference(t_v, VertexSet{p, q})) < threshold,
                       "well-connected nonadjacent pair survived the saturation loop");
            }
    }

    for (int c : ctx.f.children(v)) {
        ReduceStep step;
        step.kind = ReduceStepKind::Recurse;
        step.frame = v;
        step.u = v;
        step.v = c;
        const ReduceState here{ctx.g, ctx.f};
        record_step(ctx, std::move(step), &here);
        run_frame(ctx, c);
    }

    PhiBound bound = phi(snap.forest, snap.graph, ctx.s, v, ctx.eta);
    int leaves = 0;
    for (int u : ctx.f.subtree(v))
        if (ctx.f.children(u).empty()) ++leaves;
    ensure(leaves <= bound.value, "leaf count " + std::to_string(leaves) +
                                      " exceeds its bound " + std::to_string(bound.value) +
                                      " at vertex " + std::to_string(v));
    ctx.res->phi_records.push_back({v, leaves, bound});
}

}  // namespace

ReduceResult reduce(const Graph& g, const VertexSet& s, const TreedepthDecomposition& f, int v,
                    int k, int eta, const ReduceOptions& options) {
    if (eta < 1) throw InputError("reduce requires eta >= 1");
    if (k < 0) throw InputError("reduce requires k >= 0");
    if (f.universe_size() != g.vertex_count())
        throw InputError("reduce requires the forest universe to match the graph");
    if (!f.present(v)) throw InputError("reduce requires v to be present in the forest");
    check_vertex_set(g, s);

    ReduceResult res;
    ReduceCtx ctx{s, k, eta, options, &res, g, f};
    run_frame(ctx, v);
    res.graph = std::move(ctx.g);
    res.forest = std::move(ctx.f);
    return res;
}

ReduceState verify_trace(const ReduceState& initial, const ReduceTrace& trace, const VertexSet& s,
                         int eta) {
    ReduceState state = initial;
    const int threshold = 3 * eta;
    for (size_t idx = 0; idx < trace.steps.size(); ++idx) {
        const ReduceStep& step = trace.steps[idx];
        const std::string at = "trace step " + std::to_string(idx);
        ensure(step.before.graph == state.graph && step.before.forest == state.forest,
               at + ": recorded before-state disagrees with replay");
        const Graph& g = state.graph;
        const TreedepthDecomposition& f = state.forest;
        const int v = step.frame;
        switch (step.kind) {
            case ReduceStepKind::AddEdge: {
                const VertexSet t_v = f.subtree(v);
                const VertexSet scope = set_union(neighborhood(g, t_v, false), VertexSet{v});
                ensure(set_contains(scope, step.u) && set_contains(scope, step.v),
                       at + ": added edge leaves the frame scope");
                ensure(!g.has_edge(step.u, step.v), at + ": added edge already present");
                ensure(lambda_within(g, step.u, step.v,
                                     set_difference(t_v, VertexSet{step.u, step.v})) >= threshold,
                       at + ": added edge lacks the required connectivity");
                state.graph = state.graph.with_edge(step.u, step.v);
                break;
            }
            case ReduceStepKind::RemoveEdges: {
                const VertexSet kids = f.children(v);
                ensure(set_contains(kids, step.v), at + ": removal target is not a child");
                const VertexSet t_c0 = f.subtree(step.v);
                const VertexSet nb_c0 = neighborhood(g, t_c0, false);
                ensure(set_contains(nb_c0, step.u) && set_contains(s, step.u),
                       at + ": removal pivot is not a modulator neighbor of the child");
                ensure(is_subset(nb_c0, neighborhood(g, VertexSet{step.u}, true)),
                       at + ": child neighborhood is not covered by the pivot");
                int matching = 0;
                const int td_c0 = subtree_td(g, f, step.v, eta);
                for (int c : kids) {
                    if (c == step.v) continue;
                    if (set_intersection(g.neighbors(step.u), f.subtree(c)).empty()) continue;
                    if (subtree_td(g, f, c, eta) >= td_c0) ++matching;
                }
                ensure(matching >= threshold, at + ": not enough qualifying siblings");
                ensure(step.vertices == set_intersection(g.neighbors(step.u), t_c0),
                       at + ": removed endpoints are not exactly the pivot edges into the child");
                for (int t : step.vertices) state.graph = state.graph.without_edge(step.u, t);
                break;
            }
            case ReduceStepKind::DeleteSubtree: {
                const VertexSet kids = f.children(v);
                ensure(set_contains(kids, step.v), at + ": deletion target is not a child");
                const VertexSet t_c = f.subtree(step.v);
                ensure(step.vertices == t_c, at + ": recorded deletion set is not the subtree");
                const VertexSet nb = neighborhood(g, t_c, false);
                ensure(is_clique(g, nb), at + ": deleted subtree neighborhood is not a clique");
                const int td_c = subtree_td(g, f, step.v, eta);
                for (int w : nb) {
                    int matching = 0;
                    for (int c : kids) {
                        if (c == step.v) continue;
                        if (set_intersection(g.neighbors(w), f.subtree(c)).empty()) continue;
                        if (subtree_td(g, f, c, eta) >= td_c) ++matching;
                    }
                    ensure(matching >= threshold, at + ": a neighbor lacks qualifying siblings");
                }
                state.graph = isolate_vertices(state.graph, t_c);
                state.forest.erase_subtree(step.v);
                break;
            }
            case ReduceStepKind::Recurse: {
                ensure(set_contains(f.children(step.u), step.v), at + ": recursion into a non-child");
                break;
            }
        }
        ensure(step.after.graph == state.graph && step.after.forest == state.forest,
               at + ": recorded after-state disagrees with replay");
    }
    return state;
}

std::string trace_to_json_lines(const ReduceTrace& trace) {
    using nlohmann::json;
    auto state_json = [](const ReduceState& st) {
        json edges = json::array();
        for (const auto& [a, b] : st.graph.edges()) edges.push_back({a, b});
        return json{{"n", st.graph.vertex_count()},
                    {"edges", std::move(edges)},
                    {"parents", st.forest.parents()}};
    };
    static const char* kKindNames[] = {"add_edge", "remove_edges", "delete_subtree", "recurse"};
    std::ostringstream os;
    for (const ReduceStep& step : trace.steps) {
        json line{{"kind", kKindNames[static_cast<int>(step.kind)]},
                  {"frame", step.frame},
                  {"u", step.u},
                  {"v", step.v},
                  {"vertices", step.vertices},
                  {"before", state_json(step.before)},
                  {"after", state_json(step.after)}};
        os << line.dump() << "\n";
    }
    return os.str();
}

}  // namespace tdk
