#pragma once

#include <functional>
#include <map>
#include <optional>

#include "tdk/graph.hpp"

namespace tdk {

// Brute-force reference implementations. They share no code with the
// optimized modules they check and make no attempt to be clever; the budget
// makes them refuse oversized inputs instead of running forever.
struct OracleBudget {
    int max_vertices = 12;
    int max_subset_size = 8;
};

struct BudgetError : InputError {
    using InputError::InputError;
};

// Treedepth by memoized subset recursion: td of a disconnected graph is the
// maximum over components, td of a connected graph is 1 + min over single
// vertex deletions. The memo is keyed by plain sorted vertex vectors.
class TdOracle {
  public:
    TdOracle(const Graph& g, const OracleBudget& budget);
    int td_of_subset(const VertexSet& s);
    int td() { return td_of_subset(all_); }

  private:
    int td_connected(const VertexSet& s);
    const Graph& g_;
    VertexSet all_;
    std::map<VertexSet, int> memo_;
};

int treedepth_naive(const Graph& g, const OracleBudget& budget = {});

// Minimum-size Z with td(g - Z) <= eta and |Z| <= k; subsets enumerated by
// size then lexicographically, so the returned witness is canonical.
std::optional<VertexSet> exact_td_deletion(const Graph& g, int eta, int k,
                                           const OracleBudget& budget = {});

// Exactly k pairwise-disjoint family sets covering [0, n). Returns indices
// into the family, lexicographically first. None whenever k*d != n.
std::optional<std::vector<int>> exact_set_cover(int n, const std::vector<VertexSet>& family, int k,
                                                const OracleBudget& budget = {});

// Clique-minor containment by canonical branch-set search over an
// exactness-preserving simplicial reduction. Limited to 64 vertices.
bool has_clique_minor(const Graph& g, int t, const OracleBudget& budget = {});

// Same search, returning the branch sets of some model.
std::optional<std::vector<VertexSet>> find_clique_minor(const Graph& g, int t,
                                                        const OracleBudget& budget = {});

// True iff g has a simple path on at least t vertices.
bool has_path_with(const Graph& g, int t, const OracleBudget& budget = {});

// Maximum number of internally vertex-disjoint u-v paths, by enumerating all
// simple paths and packing their interiors.
int max_disjoint_paths_naive(const Graph& g, int u, int v, const OracleBudget& budget = {});

// Smallest vertex set touching every edge; size-then-lex enumeration.
VertexSet min_vertex_cover_naive(const Graph& g, const OracleBudget& budget = {});

// Ascending-size, lexicographic subset enumeration helper shared by the
// oracles; visit returns true to stop.
bool for_each_subset_by_size(int n, int max_size, const std::function<bool(const VertexSet&)>& visit);

}  // namespace tdk
