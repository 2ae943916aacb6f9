#include "tdk/graph.hpp"

#include <algorithm>

namespace tdk {

void ensure(bool cond, const std::string& msg) {
    if (!cond) throw CheckError(msg);
}

Graph::Graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void Graph::add_edge_internal(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
        throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
}

Graph Graph::with_edge(int u, int v) const {
    if (has_edge(u, v))
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
    Graph out = *this;
    out.add_edge_internal(u, v);
    auto& lu = out.adj_[u];
    auto& lv = out.adj_[v];
    std::sort(lu.begin(), lu.end());
    std::sort(lv.begin(), lv.end());
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v))
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
    Graph out = *this;
    auto erase_from = [](std::vector<int>& list, int x) {
        list.erase(std::find(list.begin(), list.end(), x));
    };
    erase_from(out.adj_[u], v);
    erase_from(out.adj_[v], u);
    --out.edge_count_;
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

bool is_sorted_set(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
    if (!is_sorted_set(s)) throw InputError("vertex set not sorted or has duplicates");
    if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
        throw InputError("vertex set member out of range");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
    check_vertex_set(g, s);
    std::vector<char> in_s(g.vertex_count(), 0), hit(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    VertexSet out;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (!in_s[u] && !hit[u]) {
                hit[u] = 1;
                out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    if (closed) out = set_union(out, s);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return connected_components_within(g, all);
}

std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& allowed) {
    check_vertex_set(g, allowed);
    std::vector<char> ok(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : allowed) ok[v] = 1;
    std::vector<VertexSet> out;
    for (int start : allowed) {
        if (seen[start]) continue;
        VertexSet comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (ok[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected_within(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    return connected_components_within(g, s).size() == 1;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) new_id[s[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (v < u && new_id[u] >= 0) edges.emplace_back(new_id[v], new_id[u]);
    InducedSubgraph out{Graph(static_cast<int>(s.size()), edges), s};
    return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return induced_subgraph(g, set_difference(all, s)).graph;
}

Graph isolate_vertices(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : s) gone[v] = 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(u, v);
    Graph out(g.vertex_count(), edges);
    out.labels = g.labels;
    return out;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

}  // namespace tdk
