#pragma once

#include <cstdint>

#include "tdk/graph.hpp"

namespace tdk {

// G(n, p) with a fixed portable pipeline: mt19937_64 seeded directly, one
// draw per vertex pair in ascending lexicographic order, edge present when
// the draw's top 53 bits, scaled to [0,1), fall below p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

struct PlantedInstance {
    Graph graph;
    int eta = 0;
    int optimum = 0;  // exactly k: the planted attachment centers
};

// A base forest of short paths (treedepth <= eta) plus k planted long paths
// (treedepth exactly eta+1), each hooked to the base by at most two edges
// from its middle vertex, then relabeled by a seeded shuffle. Deleting one
// middle vertex per planted path is optimal, so the instance's budget-k
// verdict is YES and budget-(k-1) is NO.
PlantedInstance planted_instance(int base_vertices, int k, int eta, std::uint64_t seed);

}  // namespace tdk
