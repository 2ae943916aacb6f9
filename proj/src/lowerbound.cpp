#include "tdk/lowerbound.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tdk {

namespace {

std::string set_to_string(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
    os << "}";
    return os.str();
}

// Ascending d-subsets of [0, n) not present in the (sorted) family.
std::vector<VertexSet> missing_subsets(int n, int d, const std::vector<VertexSet>& family) {
    std::set<VertexSet> have(family.begin(), family.end());
    std::vector<VertexSet> out;
    VertexSet pick(d);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            if (!have.count(pick)) out.push_back(pick);
            return;
        }
        for (int e = start; e < n; ++e) {
            pick[depth] = e;
            rec(e + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighbors(v)); }

}  // namespace

void validate_instance(const SetCoverInstance& inst) {
    if (inst.d < 3) throw InputError("set size d must be at least 3");
    if (inst.n < 1 || inst.k < 0) throw InputError("universe size and budget must be sensible");
    std::set<VertexSet> seen;
    for (const VertexSet& x : inst.family) {
        if (static_cast<int>(x.size()) != inst.d)
            throw InputError("family set " + set_to_string(x) + " does not have exactly " +
                             std::to_string(inst.d) + " elements");
        if (!is_sorted_set(x) || x.front() < 0 || x.back() >= inst.n)
            throw InputError("family set " + set_to_string(x) + " leaves the universe");
        if (!seen.insert(x).second)
            throw InputError("duplicate family set " + set_to_string(x));
    }
}

int GadgetGraph::matrix_id(int i, int j) const {
    ensure(!degenerate, "matrix ids are undefined for the degenerate gadget");
    ensure(i >= 0 && i < n && j >= 0 && j < k, "matrix position out of range");
    return j * n + i;
}

GadgetGraph construct(const SetCoverInstance& inst) {
    validate_instance(inst);
    GadgetGraph out;
    out.n = inst.n;
    out.d = inst.d;
    out.k = inst.k;

    if (inst.k * inst.d != inst.n) {
        out.degenerate = true;
        out.graph = complete_graph(inst.d + 1);
        out.k_prime = 0;
        out.roles.assign(inst.d + 1, VertexRole{});
        for (int v = 0; v <= inst.d; ++v) {
            out.roles[v].kind = VertexRole::Kind::Matrix;
            out.roles[v].i = v;
            out.roles[v].j = 0;
        }
        return out;
    }

    const int n = inst.n, d = inst.d, k = inst.k;
    const std::vector<VertexSet> missing = missing_subsets(n, d, inst.family);
    const int matrix_count = n * k;
    const int dummy_count = n * (d - 1);
    const int enforcer_count = k * static_cast<int>(missing.size());
    Graph g(matrix_count + dummy_count + enforcer_count);
    out.roles.assign(g.vertex_count(), VertexRole{});

    auto vid = [&](int i, int j) { return j * n + i; };
    auto did = [&](int i, int t) { return matrix_count + i * (d - 1) + t; };

    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            out.roles[vid(i, j)] = {VertexRole::Kind::Matrix, i, j, -1, {}};
        }
    // Columns and rows are cliques.
    for (int j = 0; j < k; ++j)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) g = g.with_edge(vid(a, j), vid(b, j));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) g = g.with_edge(vid(i, a), vid(i, b));
    // Dummy cliques, complete to their row.
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < d - 1; ++t) {
            out.roles[did(i, t)] = {VertexRole::Kind::Dummy, i, -1, t, {}};
            for (int u = 0; u < t; ++u) g = g.with_edge(did(i, u), did(i, t));
            for (int j = 0; j < k; ++j) g = g.with_edge(did(i, t), vid(i, j));
        }
    // Enforcers, pendant on their column's copy of the missing subset.
    int next = matrix_count + dummy_count;
    for (int j = 0; j < k; ++j)
        for (const VertexSet& x : missing) {
            out.roles[next] = {VertexRole::Kind::Enforcer, -1, j, -1, x};
            for (int i : x) g = g.with_edge(next, vid(i, j));
            ++next;
        }

    out.graph = std::move(g);
    out.k_prime = k * (n - d);

    // Everything outside the matrix must be simplicial.
    for (int v = matrix_count; v < out.graph.vertex_count(); ++v)
        ensure(is_simplicial(out.graph, v), "non-matrix vertex is not simplicial");

    // The matrix plus the dummies covers every edge; its size is exactly
    // n(k+d-1), within the advertised n(k+d).
    for (int v = 0; v < matrix_count + dummy_count; ++v) out.explicit_cover.push_back(v);
    for (const auto& [a, b] : out.graph.edges())
        ensure(a < matrix_count + dummy_count || b < matrix_count + dummy_count,
               "explicit cover misses an edge");
    ensure(static_cast<int>(out.explicit_cover.size()) == n * (k + d - 1),
           "explicit cover size mismatch");
    ensure(static_cast<int>(out.explicit_cover.size()) <= n * (k + d),
           "explicit cover exceeds its advertised bound");
    ensure(out.graph.vertex_count() ==
               matrix_count + dummy_count + k * (static_cast<int>(missing.size())),
           "gadget vertex count mismatch");
    return out;
}

VertexSet canonical_solution(const GadgetGraph& gadget, const std::vector<VertexSet>& cover) {
    ensure(!gadget.degenerate, "the degenerate gadget admits no canonical deletion set");
    if (static_cast<int>(cover.size()) != gadget.k)
        throw InputError("cover must contain exactly k sets");
    std::vector<VertexSet> sorted = cover;
    std::sort(sorted.begin(), sorted.end());
    VertexSet covered;
    for (const VertexSet& x : sorted) {
        if (static_cast<int>(x.size()) != gadget.d)
            throw InputError("cover set " + set_to_string(x) + " has the wrong size");
        covered = set_union(covered, x);
    }
    if (static_cast<int>(covered.size()) != gadget.n)
        throw InputError("cover sets are not disjoint or do not cover the universe");

    VertexSet out;  // ids ascend because columns are laid out contiguously
    for (int j = 0; j < gadget.k; ++j)
        for (int i = 0; i < gadget.n; ++i)
            if (!set_contains(sorted[j], i)) out.push_back(gadget.matrix_id(i, j));
    return out;
}

bool exists_deletion_to_minor_free(const Graph& g, int t, int max_size,
                                   const OracleBudget& budget) {
    std::set<VertexSet> visited;
    std::function<bool(const Graph&, VertexSet, int)> rec = [&](const Graph& h, VertexSet deleted,
                                                                int slack) -> bool {
        auto model = find_clique_minor(h, t, budget);
        if (!model) return true;
        if (slack == 0) return false;
        // Greedy disjoint packing: more pairwise-disjoint models than the
        // remaining budget means no hitting set fits.
        {
            Graph packed = h;
            int packs = 0;
            auto current = model;
            while (current) {
                ++packs;
                if (packs > slack) return false;
                VertexSet used;
                for (const VertexSet& part : *current) used = set_union(used, part);
                packed = isolate_vertices(packed, used);
                current = find_clique_minor(packed, t, budget);
            }
        }
        VertexSet hit;
        for (const VertexSet& part : *model) hit = set_union(hit, part);
        for (int v : hit) {
            VertexSet next = set_union(deleted, VertexSet{v});
            if (!visited.insert(next).second) continue;
            if (rec(isolate_vertices(h, VertexSet{v}), std::move(next), slack - 1)) return true;
        }
        return false;
    };
    return rec(g, {}, max_size);
}

std::vector<VertexSet> enumerate_min_deletion_sets(const Graph& g, int t, int max_size,
                                                   const OracleBudget& budget) {
    std::set<VertexSet> visited;
    std::set<VertexSet> found;
    std::function<void(const Graph&, VertexSet, int)> rec = [&](const Graph& h, VertexSet deleted,
                                                                int slack) {
        auto model = find_clique_minor(h, t, budget);
        if (!model) {
            found.insert(std::move(deleted));
            return;
        }
        if (slack == 0) return;
        VertexSet hit;
        for (const VertexSet& part : *model) hit = set_union(hit, part);
        for (int v : hit) {
            VertexSet next = set_union(deleted, VertexSet{v});
            if (!visited.insert(next).second) continue;
            rec(isolate_vertices(h, VertexSet{v}), std::move(next), slack - 1);
        }
    };
    rec(g, {}, max_size);
    if (found.empty()) return {};
    size_t best = found.begin()->size();
    for (const VertexSet& s : found) best = std::min(best, s.size());
    std::vector<VertexSet> out;
    for (const VertexSet& s : found)
        if (s.size() == best) out.push_back(s);
    return out;
}

GadgetVerdict verify_gadget(const SetCoverInstance& inst, const OracleBudget& budget) {
    validate_instance(inst);
    GadgetVerdict verdict;

    auto cover_indices = exact_set_cover(inst.n, inst.family, inst.k, budget);
    verdict.cover_exists = cover_indices.has_value();

    GadgetGraph gadget = construct(inst);
    verdict.deletion_exists =
        exists_deletion_to_minor_free(gadget.graph, inst.d + 1, gadget.k_prime, budget);

    if (verdict.cover_exists != verdict.deletion_exists) {
        verdict.detail = verdict.cover_exists
                             ? "a cover exists but no deletion set was found"
                             : "a deletion set exists but the instance has no cover";
        return verdict;
    }

    if (verdict.cover_exists && !gadget.degenerate) {
        std::vector<VertexSet> cover;
        for (int idx : *cover_indices) cover.push_back(inst.family[idx]);
        VertexSet sol = canonical_solution(gadget, cover);
        ensure(static_cast<int>(sol.size()) == gadget.k_prime,
               "canonical deletion set has the wrong size");
        VertexSet alive;
        for (int v = 0; v < gadget.graph.vertex_count(); ++v)
            if (!set_contains(sol, v)) alive.push_back(v);
        Graph rest = induced_subgraph(gadget.graph, alive).graph;

        if (has_clique_minor(rest, inst.d + 1, budget)) {
            verdict.detail = "canonical deletion set leaves a forbidden clique minor";
            return verdict;
        }
        if (has_path_with(rest, 4 * inst.d, budget)) {
            verdict.detail = "canonical deletion set leaves a long path";
            return verdict;
        }
        // Outside the kept column sets everything is simplicial of degree
        // below d; the kept sets are cliques.
        std::vector<VertexSet> sorted = cover;
        std::sort(sorted.begin(), sorted.end());
        VertexSet kept;
        for (int j = 0; j < gadget.k; ++j)
            for (int i : sorted[j]) kept = set_union(kept, VertexSet{gadget.matrix_id(i, j)});
        for (int v = 0; v < rest.vertex_count(); ++v) {
            int original = alive[v];
            if (set_contains(kept, original)) continue;
            if (!is_simplicial(rest, v) || rest.degree(v) >= inst.d) {
                verdict.detail = "a vertex outside the kept sets is not simplicial of low degree";
                return verdict;
            }
        }
        for (int j = 0; j < gadget.k; ++j) {
            VertexSet z;
            for (int i : sorted[j]) z.push_back(gadget.matrix_id(i, j));
            std::sort(z.begin(), z.end());
            if (!is_clique(gadget.graph, z)) {
                verdict.detail = "a kept column set is not a clique";
                return verdict;
            }
        }
    }

    verdict.confirmed = true;
    verdict.detail = "confirmed";
    return verdict;
}

}  // namespace tdk
