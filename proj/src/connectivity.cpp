#include "tdk/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace tdk {

namespace {

// in-node of w is 2w, out-node is 2w+1. Non-terminal vertices get a unit
// in->out arc; each undirected edge {x,y} becomes out(x)->in(y) and
// out(y)->in(x). Flow goes from out(source) to in(sink). Edge arcs carry
// n+1 units so every minimum cut consists of split arcs alone and the
// separator can be read off the residual reachability; the one exception is
// a direct source-sink edge, which is a single path on its own.
class SplitFlow {
  public:
    SplitFlow(const Graph& g, int s, int t) : source_(2 * s + 1), sink_(2 * t) {
        head_.assign(2 * g.vertex_count(), {});
        const int big = g.vertex_count() + 1;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != s && w != t) add_arc(2 * w, 2 * w + 1, 1);
        for (auto [x, y] : g.edges()) {
            const bool terminal_pair = (x == s && y == t) || (x == t && y == s);
            add_arc(2 * x + 1, 2 * y, terminal_pair ? 1 : big);
            add_arc(2 * y + 1, 2 * x, terminal_pair ? 1 : big);
        }
    }

    int max_flow() {
        int total = 0;
        while (augment()) ++total;
        return total;
    }

    std::vector<char> residual_reachable() const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> queue;
        seen[source_] = 1;
        queue.push(source_);
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop();
            for (int id : head_[node]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push(a.to);
                }
            }
        }
        return seen;
    }

  private:
    struct Arc {
        int to;
        int cap;
    };

    void add_arc(int from, int to, int cap) {
        head_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        head_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});  // id ^ 1 is the reverse arc
    }

    bool augment() {
        std::vector<int> via(head_.size(), -1);
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> queue;
        seen[source_] = 1;
        queue.push(source_);
        while (!queue.empty() && !seen[sink_]) {
            int node = queue.front();
            queue.pop();
            for (int id : head_[node]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    via[a.to] = id;
                    queue.push(a.to);
                }
            }
        }
        if (!seen[sink_]) return false;
        for (int node = sink_; node != source_;) {
            int id = via[node];
            arcs_[id].cap -= 1;
            arcs_[id ^ 1].cap += 1;
            node = arcs_[id ^ 1].to;
        }
        return true;
    }

    int source_;
    int sink_;
    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
};

}  // namespace

int lambda(const Graph& g, int u, int v) {
    if (u == v) throw InputError("lambda needs two distinct vertices");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw InputError("lambda: vertex id out of range");
    SplitFlow flow(g, u, v);
    return flow.max_flow();
}

int lambda_within(const Graph& g, int u, int v, const VertexSet& allowed) {
    check_vertex_set(g, allowed);
    if (set_contains(allowed, u) || set_contains(allowed, v))
        throw InputError("lambda_within: terminals must not belong to the allowed set");
    VertexSet scope = set_union(allowed, VertexSet{std::min(u, v), std::max(u, v)});
    auto sub = induced_subgraph(g, scope);
    int su = -1, sv = -1;
    for (size_t i = 0; i < sub.old_ids.size(); ++i) {
        if (sub.old_ids[i] == u) su = static_cast<int>(i);
        if (sub.old_ids[i] == v) sv = static_cast<int>(i);
    }
    return lambda(sub.graph, su, sv);
}

SeparatorResult min_vertex_separator(const Graph& g, int p, int q) {
    if (p == q) throw InputError("separator needs two distinct vertices");
    if (g.has_edge(p, q)) throw InputError("no separator avoids both endpoints of an edge");
    SplitFlow flow(g, p, q);
    int value = flow.max_flow();
    auto reachable = flow.residual_reachable();
    SeparatorResult out;
    out.value = value;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == p || w == q) continue;
        if (reachable[2 * w] && !reachable[2 * w + 1]) out.separator.push_back(w);
    }
    ensure(static_cast<int>(out.separator.size()) == value,
           "separator size does not match the flow value");
    // removing the separator must leave p and q in different components
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    auto rest = set_difference(all, out.separator);
    for (const auto& comp : connected_components_within(g, rest))
        ensure(!(set_contains(comp, p) && set_contains(comp, q)),
               "separator does not separate its terminals");
    return out;
}

}  // namespace tdk
