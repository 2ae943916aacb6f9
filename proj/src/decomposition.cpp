#include "tdk/decomposition.hpp"

#include <algorithm>

namespace tdk {

TreedepthDecomposition::TreedepthDecomposition(std::vector<int> parent) : parent_(std::move(parent)) {
    int n = universe_size();
    for (int v = 0; v < n; ++v) {
        int p = parent_[v];
        if (p == ABSENT || p == ROOT) continue;
        if (p < 0 || p >= n || p == v) throw InputError("bad parent id for vertex " + std::to_string(v));
        if (parent_[p] == ABSENT) throw InputError("parent of " + std::to_string(v) + " is absent");
    }
    // reject cycles
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int u = v; u >= 0 && parent_[u] != ABSENT && !is_root(u); u = parent_[u])
            if (++steps > n) throw InputError("parent relation has a cycle");
    }
}

void TreedepthDecomposition::check_present(int v) const {
    if (v < 0 || v >= universe_size()) throw InputError("vertex id out of universe");
    if (!present(v)) throw InputError("vertex " + std::to_string(v) + " absent from forest");
}

int TreedepthDecomposition::parent(int v) const {
    check_present(v);
    return parent_[v];
}

void TreedepthDecomposition::set_parent(int v, int p) {
    if (v < 0 || v >= universe_size()) throw InputError("vertex id out of universe");
    if (p != ROOT) {
        check_present(p);
        if (p == v) throw InputError("vertex cannot parent itself");
    }
    parent_[v] = p;
}

void TreedepthDecomposition::erase(int v) {
    check_present(v);
    for (int u = 0; u < universe_size(); ++u)
        if (u != v && present(u) && parent_[u] == v)
            throw InputError("cannot erase vertex " + std::to_string(v) + " with children");
    parent_[v] = ABSENT;
}

VertexSet TreedepthDecomposition::present_vertices() const {
    VertexSet out;
    for (int v = 0; v < universe_size(); ++v)
        if (present(v)) out.push_back(v);
    return out;
}

VertexSet TreedepthDecomposition::roots() const {
    VertexSet out;
    for (int v = 0; v < universe_size(); ++v)
        if (present(v) && is_root(v)) out.push_back(v);
    return out;
}

VertexSet TreedepthDecomposition::children(int v) const {
    check_present(v);
    VertexSet out;
    for (int u = 0; u < universe_size(); ++u)
        if (present(u) && parent_[u] == v) out.push_back(u);
    return out;
}

VertexSet TreedepthDecomposition::ancestors(int v) const {
    check_present(v);
    VertexSet out;
    for (int u = parent_[v]; u != ROOT; u = parent_[u]) out.push_back(u);
    return out;
}

VertexSet TreedepthDecomposition::subtree(int v) const {
    check_present(v);
    VertexSet out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int c : children(u)) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void TreedepthDecomposition::erase_subtree(int v) {
    for (int u : subtree(v)) parent_[u] = ABSENT;
}

int TreedepthDecomposition::depth(int v) const {
    check_present(v);
    int d = 1;
    for (int u = parent_[v]; u != ROOT; u = parent_[u]) ++d;
    return d;
}

int TreedepthDecomposition::height() const {
    int h = 0;
    for (int v = 0; v < universe_size(); ++v)
        if (present(v)) h = std::max(h, depth(v));
    return h;
}

int TreedepthDecomposition::subtree_height(int v) const {
    int base = depth(v);
    int h = 1;
    for (int u : subtree(v)) h = std::max(h, depth(u) - base + 1);
    return h;
}

DepthReport geometry(const TreedepthDecomposition& f) {
    DepthReport out;
    out.depth.assign(f.universe_size(), 0);
    for (int v = 0; v < f.universe_size(); ++v)
        if (f.present(v)) {
            out.depth[v] = f.depth(v);
            out.height = std::max(out.height, out.depth[v]);
        }
    return out;
}

bool ancestor_related(const TreedepthDecomposition& f, int u, int v) {
    for (int w = u; w != TreedepthDecomposition::ROOT; w = f.parent(w))
        if (w == v) return true;
    for (int w = v; w != TreedepthDecomposition::ROOT; w = f.parent(w))
        if (w == u) return true;
    return false;
}

std::optional<DecompositionViolation> is_valid_decomposition(const Graph& g,
                                                             const TreedepthDecomposition& f,
                                                             bool require_nice) {
    if (f.universe_size() != g.vertex_count())
        return DecompositionViolation{"forest universe size differs from graph vertex count",
                                      std::nullopt, std::nullopt};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!f.present(v))
            return DecompositionViolation{"vertex not covered by forest", std::nullopt, v};
    for (auto [u, v] : g.edges())
        if (!ancestor_related(f, u, v))
            return DecompositionViolation{"edge endpoints not in ancestor-descendant relation",
                                          std::make_pair(u, v), std::nullopt};
    if (require_nice)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (f.present(v) && !is_connected_within(g, f.subtree(v)))
                return DecompositionViolation{"subtree induces a disconnected subgraph", std::nullopt, v};
    return std::nullopt;
}

}  // namespace tdk
