#pragma once

#include <optional>
#include <variant>

#include "tdk/graph.hpp"

namespace tdk {

// Rooted forest over a subset of a graph's vertices. parent[v] is the parent
// id, ROOT for roots, ABSENT for vertices the forest does not cover (for
// example, modulator vertices when the forest decomposes G - S).
class TreedepthDecomposition {
  public:
    static constexpr int ROOT = -1;
    static constexpr int ABSENT = -2;

    TreedepthDecomposition() = default;
    explicit TreedepthDecomposition(int n) : parent_(n, ABSENT) {}
    explicit TreedepthDecomposition(std::vector<int> parent);

    int universe_size() const { return static_cast<int>(parent_.size()); }
    bool present(int v) const { return parent_.at(v) != ABSENT; }
    bool is_root(int v) const { return parent_.at(v) == ROOT; }
    int parent(int v) const;

    void set_parent(int v, int p);  // p may be ROOT
    void erase(int v);

    VertexSet present_vertices() const;
    VertexSet roots() const;
    VertexSet children(int v) const;

    // Proper ancestors of v, nearest first.
    VertexSet ancestors(int v) const;
    // v together with all its descendants, sorted.
    VertexSet subtree(int v) const;
    void erase_subtree(int v);

    int depth(int v) const;   // root has depth 1
    int height() const;       // 0 for an empty forest
    int subtree_height(int v) const;
    int reach(int v) const { return height() - depth(v); }

    bool operator==(const TreedepthDecomposition& other) const { return parent_ == other.parent_; }

    const std::vector<int>& parents() const { return parent_; }

  private:
    void check_present(int v) const;
    std::vector<int> parent_;
};

bool ancestor_related(const TreedepthDecomposition& f, int u, int v);

struct DepthReport {
    int height = 0;
    std::vector<int> depth;  // 0 for absent vertices
};

DepthReport geometry(const TreedepthDecomposition& f);

struct DecompositionViolation {
    std::string message;
    std::optional<std::pair<int, int>> edge;  // uncovered edge
    std::optional<int> vertex;                // vertex with a disconnected subtree
};

// OK is the empty optional. When require_nice is set, every subtree must
// induce a connected subgraph of g.
std::optional<DecompositionViolation> is_valid_decomposition(const Graph& g,
                                                             const TreedepthDecomposition& f,
                                                             bool require_nice);

}  // namespace tdk
