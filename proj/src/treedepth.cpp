#include "tdk/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace tdk {

namespace {

uint64_t bit(int i) { return uint64_t{1} << i; }

// Branch-and-bound treedepth on one connected component of at most 64
// vertices. td_within(s, limit) returns td(g[s]) when that is <= limit and
// limit+1 otherwise. Memo entries marked exact hold true values; inexact
// entries are lower bounds from earlier cutoffs.
class ComponentSolver {
  public:
    ComponentSolver(const Graph& g, const VertexSet& comp) : old_ids_(comp) {
        int m = static_cast<int>(comp.size());
        if (m > 64) throw InputError("exact treedepth limited to components of 64 vertices");
        std::vector<int> new_id(g.vertex_count(), -1);
        for (int i = 0; i < m; ++i) new_id[comp[i]] = i;
        adj_.assign(m, 0);
        for (int i = 0; i < m; ++i)
            for (int u : g.neighbors(comp[i]))
                if (new_id[u] >= 0) adj_[i] |= bit(new_id[u]);
        full_ = (m == 64) ? ~uint64_t{0} : bit(m) - 1;
    }

    int size() const { return std::popcount(full_); }

    int td_within(uint64_t s, int limit) {
        if (s == 0) return 0;
        if (limit < 0) return limit + 1;
        auto it = memo_.find(s);
        if (it != memo_.end()) {
            if (it->second.exact) return std::min(static_cast<int>(it->second.value), limit + 1);
            if (it->second.value > limit) return limit + 1;
        }
        int value;
        uint64_t first_comp = component_of(s, std::countr_zero(s));
        if (first_comp != s) {
            value = 0;
            uint64_t rest = s;
            while (rest) {
                uint64_t comp = component_of(rest, std::countr_zero(rest));
                rest &= ~comp;
                value = std::max(value, td_within(comp, limit));
                if (value > limit) break;
            }
        } else {
            value = td_connected(s, limit);
        }
        store(s, value, value <= limit);
        return value;
    }

    // Smallest vertex (component-local id) whose deletion drops the
    // treedepth of the connected set s below t.
    int choose_root(uint64_t s, int t) {
        for (uint64_t m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (td_within(s & ~bit(v), t - 1) <= t - 1) return v;
        }
        throw CheckError("no root candidate found; treedepth value inconsistent");
    }

    uint64_t component_of(uint64_t s, int v) const {
        uint64_t comp = bit(v);
        for (;;) {
            uint64_t grown = comp;
            for (uint64_t m = comp; m; m &= m - 1) grown |= adj_[std::countr_zero(m)] & s;
            if (grown == comp) break;
            comp = grown;
        }
        return comp;
    }

    uint64_t full() const { return full_; }
    int old_id(int i) const { return old_ids_[i]; }

  private:
    int td_connected(uint64_t s, int limit) {
        if (std::popcount(s) == 1) return std::min(1, limit + 1);
        int best = limit + 1;
        for (uint64_t m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int sub = td_within(s & ~bit(v), best - 2);
            if (sub <= best - 2) best = 1 + sub;
            if (best == 1) break;
        }
        return best;
    }

    void store(uint64_t s, int value, bool exact) {
        auto it = memo_.find(s);
        if (it == memo_.end()) {
            memo_.emplace(s, Entry{static_cast<int8_t>(value), exact});
            return;
        }
        if (exact) {
            it->second = Entry{static_cast<int8_t>(value), true};
        } else if (!it->second.exact && value > it->second.value) {
            it->second.value = static_cast<int8_t>(value);
        }
    }

    struct Entry {
        int8_t value;
        bool exact;
    };

    std::vector<uint64_t> adj_;
    uint64_t full_ = 0;
    VertexSet old_ids_;
    std::unordered_map<uint64_t, Entry> memo_;
};

void build_forest(ComponentSolver& solver, uint64_t s, int t, int parent_old,
                  TreedepthDecomposition& f) {
    uint64_t rest = s;
    while (rest) {
        uint64_t comp = solver.component_of(rest, std::countr_zero(rest));
        rest &= ~comp;
        int tc = solver.td_within(comp, t);
        ensure(tc <= t, "component treedepth exceeds reconstruction bound");
        int root = solver.choose_root(comp, tc);
        int root_old = solver.old_id(root);
        f.set_parent(root_old, parent_old < 0 ? TreedepthDecomposition::ROOT : parent_old);
        build_forest(solver, comp & ~bit(root), tc - 1, root_old, f);
    }
}

}  // namespace

TdResult treedepth_exact(const Graph& g, int cap) {
    if (cap < 0) throw InputError("treedepth cap must be non-negative");
    int value = 0;
    for (const auto& comp : connected_components(g)) {
        ComponentSolver solver(g, comp);
        int t = solver.td_within(solver.full(), cap);
        if (t > cap) return TdResult{true, 0};
        value = std::max(value, t);
    }
    return TdResult{false, value};
}

bool treedepth_at_most(const Graph& g, int cap) {
    if (cap < 0) return g.vertex_count() == 0;
    return !treedepth_exact(g, cap).exceeds_cap;
}

NiceDecompositionResult min_height_nice_decomposition(const Graph& g, int cap) {
    if (cap < 0) throw InputError("treedepth cap must be non-negative");
    TreedepthDecomposition f(g.vertex_count());
    for (const auto& comp : connected_components(g)) {
        ComponentSolver solver(g, comp);
        int t = solver.td_within(solver.full(), cap);
        if (t > cap) return NiceDecompositionResult{true, TreedepthDecomposition(g.vertex_count())};
        build_forest(solver, solver.full(), t, -1, f);
    }
    return NiceDecompositionResult{false, make_nice(std::move(f), g)};
}

TreedepthDecomposition make_nice(TreedepthDecomposition f, const Graph& g) {
    if (f.universe_size() != g.vertex_count())
        throw InputError("make_nice: forest universe must match the graph");
    auto before = geometry(f);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < f.universe_size() && !changed; ++u) {
            if (!f.present(u) || f.is_root(u)) continue;
            int p = f.parent(u);
            bool attached = false;
            for (int w : f.subtree(u))
                if (g.has_edge(w, p)) {
                    attached = true;
                    break;
                }
            if (!attached) {
                f.set_parent(u, f.is_root(p) ? TreedepthDecomposition::ROOT : f.parent(p));
                changed = true;
            }
        }
    }
    auto after = geometry(f);
    for (int v = 0; v < f.universe_size(); ++v)
        if (f.present(v)) ensure(after.depth[v] <= before.depth[v], "re-hanging increased a depth");
    ensure(!is_valid_decomposition(g, f, true).has_value(),
           "re-hanging did not produce a nice valid decomposition");
    return f;
}

}  // namespace tdk
