#include "tdk/gen.hpp"

#include <random>

namespace tdk {

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (p < 0.0 || p > 1.0) throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            // Top 53 bits scaled to [0, 1); identical on every platform.
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

PlantedInstance planted_instance(int base_vertices, int k, int eta, std::uint64_t seed) {
    if (eta < 1) throw InputError("planted instances require eta >= 1");
    if (k < 0 || base_vertices < 0) throw InputError("sizes must be nonnegative");
    std::mt19937_64 rng(seed);

    const int base_block = (1 << eta) - 1;        // longest path of treedepth <= eta
    const int planted_block = (1 << (eta + 1)) - 1;  // shortest path of treedepth eta+1
    const int total = base_vertices + k * planted_block;
    std::vector<std::pair<int, int>> edges;

    for (int v = 0; v + 1 < base_vertices; ++v)
        if ((v + 1) % base_block != 0) edges.emplace_back(v, v + 1);

    for (int p = 0; p < k; ++p) {
        const int start = base_vertices + p * planted_block;
        for (int v = start; v + 1 < start + planted_block; ++v) edges.emplace_back(v, v + 1);
        if (base_vertices > 0) {
            const int middle = start + planted_block / 2;
            const int hooks = static_cast<int>(rng() % 3);
            int first = -1;
            for (int h = 0; h < hooks; ++h) {
                const int target = static_cast<int>(rng() % base_vertices);
                if (target == first) continue;
                edges.emplace_back(middle, target);
                first = target;
            }
        }
    }

    // Portable Fisher-Yates relabeling.
    std::vector<int> relabel(total);
    for (int v = 0; v < total; ++v) relabel[v] = v;
    for (int i = total - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(relabel[i], relabel[j]);
    }
    for (auto& [a, b] : edges) {
        a = relabel[a];
        b = relabel[b];
    }

    PlantedInstance out;
    out.graph = Graph(total, edges);
    out.eta = eta;
    out.optimum = k;
    return out;
}

}  // namespace tdk
