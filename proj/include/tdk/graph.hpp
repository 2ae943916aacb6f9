#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdk {

// Sorted vector of vertex ids, used for every vertex subset in the library.
using VertexSet = std::vector<int>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails. These checks are never
// compiled out.
struct CheckError : std::logic_error {
    using std::logic_error::logic_error;
};

void ensure(bool cond, const std::string& msg);

// Simple undirected graph on dense vertex ids [0, n). Adjacency lists are
// kept sorted; construction and every mutation re-establish symmetry and
// reject self-loops.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Both return a modified copy; the original is untouched.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    std::vector<std::string> labels;  // optional external names, size 0 or n

    bool operator==(const Graph& other) const;

  private:
    void add_edge_internal(int u, int v);
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

bool is_sorted_set(const VertexSet& s);
void check_vertex_set(const Graph& g, const VertexSet& s);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);

// N_G(s) when closed is false, N_G[s] when closed is true.
VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed);

// Maximal connected vertex sets, ascending by minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of g[allowed] without materializing the subgraph.
std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& allowed);

bool is_connected_within(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_ids;  // old_ids[new] = old
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph delete_vertices(const Graph& g, const VertexSet& s);

// Removes every edge incident to s but keeps the id space intact. The
// pipeline models deletions this way so snapshots stay comparable.
Graph isolate_vertices(const Graph& g, const VertexSet& s);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace tdk
