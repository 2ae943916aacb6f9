#include "tdk/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tdk {

namespace {

constexpr long kSearchNodeCap = 100'000'000;

void check_size(const Graph& g, const OracleBudget& budget, const char* who) {
    if (g.vertex_count() > budget.max_vertices)
        throw BudgetError(std::string(who) + ": graph has " + std::to_string(g.vertex_count()) +
                          " vertices, budget allows " + std::to_string(budget.max_vertices));
}

uint64_t bit(int i) { return uint64_t{1} << i; }

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

VertexSet mask_to_set(uint64_t m) {
    VertexSet out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

}  // namespace

bool for_each_subset_by_size(int n, int max_size, const std::function<bool(const VertexSet&)>& visit) {
    VertexSet current;
    std::function<bool(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) return visit(current);
        for (int v = start; v <= n - remaining; ++v) {
            current.push_back(v);
            if (rec(v + 1, remaining - 1)) return true;
            current.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= std::min(n, max_size); ++size)
        if (rec(0, size)) return true;
    return false;
}

TdOracle::TdOracle(const Graph& g, const OracleBudget& budget) : g_(g) {
    check_size(g, budget, "treedepth oracle");
    if (g.vertex_count() > 24) throw BudgetError("treedepth oracle: hard 24-vertex ceiling");
    all_.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all_[v] = v;
}

int TdOracle::td_connected(const VertexSet& s) {
    if (s.size() == 1) return 1;
    int best = static_cast<int>(s.size());
    for (int v : s) {
        VertexSet rest;
        rest.reserve(s.size() - 1);
        for (int u : s)
            if (u != v) rest.push_back(u);
        best = std::min(best, 1 + td_of_subset(rest));
    }
    return best;
}

int TdOracle::td_of_subset(const VertexSet& s) {
    if (s.empty()) return 0;
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    auto comps = connected_components_within(g_, s);
    int value = 0;
    if (comps.size() == 1) {
        value = td_connected(s);
    } else {
        for (const auto& comp : comps) value = std::max(value, td_of_subset(comp));
    }
    memo_.emplace(s, value);
    return value;
}

int treedepth_naive(const Graph& g, const OracleBudget& budget) {
    TdOracle oracle(g, budget);
    return oracle.td();
}

std::optional<VertexSet> exact_td_deletion(const Graph& g, int eta, int k, const OracleBudget& budget) {
    check_size(g, budget, "td-deletion oracle");
    if (k > budget.max_subset_size)
        throw BudgetError("td-deletion oracle: k exceeds subset budget");
    if (eta < 0 || k < 0) throw InputError("td-deletion oracle: eta and k must be non-negative");
    TdOracle oracle(g, budget);
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::optional<VertexSet> found;
    for_each_subset_by_size(g.vertex_count(), k, [&](const VertexSet& z) {
        if (oracle.td_of_subset(set_difference(all, z)) <= eta) {
            found = z;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<int>> exact_set_cover(int n, const std::vector<VertexSet>& family, int k,
                                                const OracleBudget& budget) {
    if (n < 0 || k < 0) throw InputError("set cover: negative size");
    if (n > 64) throw BudgetError("set cover oracle: universe exceeds 64 elements");
    (void)budget;
    size_t d = family.empty() ? 0 : family[0].size();
    for (const auto& set : family) {
        if (set.size() != d) throw InputError("set cover: non-uniform family");
        if (!is_sorted_set(set) || (!set.empty() && (set.front() < 0 || set.back() >= n)))
            throw InputError("set cover: malformed set");
    }
    if (n == 0) return k == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    if (family.empty()) return std::nullopt;
    if (static_cast<long>(k) * static_cast<long>(d) != n) return std::nullopt;

    std::vector<uint64_t> masks(family.size());
    for (size_t i = 0; i < family.size(); ++i) {
        uint64_t m = 0;
        for (int e : family[i]) m |= bit(e);
        masks[i] = m;
    }
    uint64_t universe = (n == 64) ? ~uint64_t{0} : bit(n) - 1;
    std::vector<int> chosen;
    std::function<bool(uint64_t)> rec = [&](uint64_t covered) {
        if (covered == universe) return static_cast<int>(chosen.size()) == k;
        if (static_cast<int>(chosen.size()) == k) return false;
        int e = std::countr_zero(~covered & universe);
        int from = chosen.empty() ? 0 : chosen.back() + 1;
        for (int i = from; i < static_cast<int>(family.size()); ++i) {
            if (!(masks[i] & bit(e)) || (masks[i] & covered)) continue;
            chosen.push_back(i);
            if (rec(covered | masks[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(0)) {
        // contract check: union is the whole universe, sets pairwise disjoint
        uint64_t seen = 0;
        for (int i : chosen) {
            ensure((seen & masks[i]) == 0, "set cover oracle returned overlapping sets");
            seen |= masks[i];
        }
        ensure(seen == universe, "set cover oracle returned a non-cover");
        return chosen;
    }
    return std::nullopt;
}

namespace {

// Branch-set search state for clique minors on at most 64 vertices.
class MinorSearch {
  public:
    MinorSearch(const Graph& g, int t) : t_(t), n_(g.vertex_count()), adj_(adjacency_masks(g)) {}

    std::optional<std::vector<uint64_t>> run() {
        if (t_ <= 0) return std::vector<uint64_t>{};
        uint64_t alive = (n_ == 64) ? ~uint64_t{0} : (n_ == 0 ? 0 : bit(n_) - 1);
        alive = reduce_simplicial(alive);
        if (std::popcount(alive) < t_) return std::nullopt;
        if (auto clique = find_clique_subgraph(alive)) {
            std::vector<uint64_t> model;
            for (int v : mask_to_set(*clique)) model.push_back(bit(v));
            return model;
        }
        sets_.clear();
        if (search_sets(alive, 0, -1)) return sets_;
        return std::nullopt;
    }

  private:
    void tick() {
        if (++nodes_ > kSearchNodeCap) throw BudgetError("clique-minor search budget exceeded");
    }

    // A simplicial vertex with degree at most t-2 is never needed by any
    // model, so it can be deleted without changing the answer.
    uint64_t reduce_simplicial(uint64_t alive) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint64_t m = alive; m; m &= m - 1) {
                int v = std::countr_zero(m);
                uint64_t nb = adj_[v] & alive;
                if (std::popcount(nb) > t_ - 2) continue;
                bool clique = true;
                for (uint64_t w = nb; w && clique; w &= w - 1) {
                    int u = std::countr_zero(w);
                    if ((nb & ~(adj_[u] | bit(u))) != 0) clique = false;
                }
                if (clique) {
                    alive &= ~bit(v);
                    changed = true;
                }
            }
        }
        return alive;
    }

    std::optional<uint64_t> find_clique_subgraph(uint64_t alive) {
        uint64_t chosen = 0;
        std::function<bool(uint64_t, int)> rec = [&](uint64_t cands, int need) {
            tick();
            if (need == 0) return true;
            if (std::popcount(cands) < need) return false;
            while (cands) {
                int v = std::countr_zero(cands);
                cands &= ~bit(v);
                chosen |= bit(v);
                if (rec(cands & adj_[v], need - 1)) return true;
                chosen &= ~bit(v);
                if (std::popcount(cands) < need) return false;
            }
            return false;
        };
        if (rec(alive, t_)) return chosen;
        return std::nullopt;
    }

    bool search_sets(uint64_t alive, uint64_t used, int last_seed) {
        tick();
        if (static_cast<int>(sets_.size()) == t_) return true;
        int need = t_ - static_cast<int>(sets_.size());
        uint64_t avail = alive & ~used;
        if (std::popcount(avail) < need) return false;
        for (uint64_t m = avail; m; m &= m - 1) {
            int seed = std::countr_zero(m);
            if (seed <= last_seed) continue;
            if (grow_set(alive, used, seed, bit(seed), adj_[seed] & alive & ~used & ~bit(seed), 0))
                return true;
        }
        return false;
    }

    // Enumerates every connected vertex set with minimum element seed exactly
    // once, trying to close it as the next branch set at every stage.
    bool grow_set(uint64_t alive, uint64_t used, int seed, uint64_t set, uint64_t frontier,
                  uint64_t banned) {
        tick();
        uint64_t nb = 0;
        for (uint64_t s = set; s; s &= s - 1) nb |= adj_[std::countr_zero(s)];
        nb &= alive & ~set;
        bool adjacent_to_all = true;
        for (size_t j = 0; j < sets_.size() && adjacent_to_all; ++j)
            if ((nb & sets_[j]) == 0) adjacent_to_all = false;
        if (adjacent_to_all) {
            sets_.push_back(set);
            if (search_sets(alive, used | set, seed)) return true;
            sets_.pop_back();
        }
        uint64_t low_mask = bit(seed) - 1;
        uint64_t cands = frontier & ~banned & ~used & ~low_mask & alive;
        if (cands == 0) return false;
        int c = std::countr_zero(cands);
        if (grow_set(alive, used, seed, set | bit(c),
                     (frontier | (adj_[c] & alive)) & ~(set | bit(c)), banned))
            return true;
        return grow_set(alive, used, seed, set, frontier, banned | bit(c));
    }

    int t_;
    int n_;
    std::vector<uint64_t> adj_;
    std::vector<uint64_t> sets_;
    long nodes_ = 0;
};

}  // namespace

std::optional<std::vector<VertexSet>> find_clique_minor(const Graph& g, int t,
                                                        const OracleBudget& budget) {
    check_size(g, budget, "clique-minor oracle");
    if (g.vertex_count() > 64) throw BudgetError("clique-minor oracle: hard 64-vertex ceiling");
    if (t <= 0) return std::vector<VertexSet>{};
    // components are independent; a model with t >= 2 lives inside one
    std::optional<std::vector<VertexSet>> found;
    if (t == 1) {
        if (g.vertex_count() == 0) return std::nullopt;
        return std::vector<VertexSet>{{0}};
    }
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        MinorSearch search(sub.graph, t);
        if (auto model = search.run()) {
            std::vector<VertexSet> out;
            for (uint64_t mask : *model) {
                VertexSet set;
                for (int v : mask_to_set(mask)) set.push_back(sub.old_ids[v]);
                std::sort(set.begin(), set.end());
                out.push_back(std::move(set));
            }
            found = std::move(out);
            break;
        }
    }
    return found;
}

bool has_clique_minor(const Graph& g, int t, const OracleBudget& budget) {
    return find_clique_minor(g, t, budget).has_value();
}

bool has_path_with(const Graph& g, int t, const OracleBudget& budget) {
    check_size(g, budget, "path oracle");
    if (g.vertex_count() > 64) throw BudgetError("path oracle: hard 64-vertex ceiling");
    if (t <= 0) return true;
    if (t == 1) return g.vertex_count() >= 1;
    auto adj = adjacency_masks(g);
    int n = g.vertex_count();
    long nodes = 0;
    std::function<bool(int, uint64_t, int)> dfs = [&](int v, uint64_t visited, int length) {
        if (++nodes > kSearchNodeCap) throw BudgetError("path search budget exceeded");
        if (length >= t) return true;
        // everything still reachable from v through unvisited vertices
        uint64_t reach = bit(v);
        for (;;) {
            uint64_t grown = reach;
            for (uint64_t m = reach; m; m &= m - 1) grown |= adj[std::countr_zero(m)] & ~visited;
            if (grown == reach) break;
            reach = grown;
        }
        if (length + std::popcount(reach & ~visited) < t) return false;
        for (uint64_t m = adj[v] & ~visited; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (dfs(u, visited | bit(u), length + 1)) return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (dfs(v, bit(v), 1)) return true;
    return false;
}

int max_disjoint_paths_naive(const Graph& g, int u, int v, const OracleBudget& budget) {
    check_size(g, budget, "disjoint-paths oracle");
    if (u == v) throw InputError("disjoint-paths oracle: identical endpoints");
    if (g.vertex_count() > 30) throw BudgetError("disjoint-paths oracle: hard 30-vertex ceiling");
    auto adj = adjacency_masks(g);
    // all interiors of simple u-v paths, deduplicated as vertex masks
    std::vector<uint64_t> interiors;
    long count = 0;
    std::function<void(int, uint64_t)> walk = [&](int at, uint64_t interior) {
        if (++count > 2'000'000) throw BudgetError("disjoint-paths oracle: path budget exceeded");
        for (uint64_t m = adj[at]; m; m &= m - 1) {
            int next = std::countr_zero(m);
            if (next == v) {
                if (interior != 0) interiors.push_back(interior);
                continue;
            }
            if (next == u || (interior & bit(next))) continue;
            walk(next, interior | bit(next));
        }
    };
    walk(u, 0);
    std::sort(interiors.begin(), interiors.end());
    interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());
    // drop strict supersets; they never help a packing
    std::vector<uint64_t> useful;
    for (uint64_t a : interiors) {
        bool dominated = false;
        for (uint64_t b : interiors)
            if (b != a && (a & b) == b) {
                dominated = true;
                break;
            }
        if (!dominated) useful.push_back(a);
    }
    std::function<int(size_t, uint64_t)> pack = [&](size_t i, uint64_t taken) -> int {
        if (i == useful.size()) return 0;
        int best = pack(i + 1, taken);
        if ((useful[i] & taken) == 0) best = std::max(best, 1 + pack(i + 1, taken | useful[i]));
        return best;
    };
    return (g.has_edge(u, v) ? 1 : 0) + pack(0, 0);
}

VertexSet min_vertex_cover_naive(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "vertex-cover oracle");
    auto edges = g.edges();
    VertexSet best;
    for_each_subset_by_size(g.vertex_count(), g.vertex_count(), [&](const VertexSet& s) {
        for (auto [a, b] : edges)
            if (!set_contains(s, a) && !set_contains(s, b)) return false;
        best = s;
        return true;
    });
    return best;
}

}  // namespace tdk
