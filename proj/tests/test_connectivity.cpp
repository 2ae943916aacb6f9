#include "doctest.h"
#include "tdk/connectivity.hpp"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"
#include "tdk/oracles.hpp"

using namespace tdk;

TEST_CASE("lambda on the standard small graphs") {
    Graph two_parts(4, {{0, 1}, {2, 3}});
    CHECK(lambda(two_parts, 0, 2) == 0);

    Graph k4 = complete_graph(4);
    CHECK(lambda(k4, 0, 3) == 3);
    CHECK(lambda(k4, 1, 2) == 3);

    Graph c4 = cycle_graph(4);
    CHECK(lambda(c4, 0, 2) == 2);
    CHECK(lambda(c4, 0, 1) == 2);  // the edge plus the long way around

    CHECK_THROWS_AS(lambda(k4, 1, 1), InputError);
}

TEST_CASE("lambda_within restricts to an induced subgraph") {
    Graph c4 = cycle_graph(4);
    CHECK(lambda_within(c4, 0, 1, {}) == 1);  // only the direct edge
    CHECK(lambda_within(c4, 0, 2, {}) == 0);
    CHECK(lambda_within(c4, 0, 2, {1}) == 1);     // one midpoint, one path
    CHECK(lambda_within(c4, 0, 2, {1, 3}) == 2);  // full cycle again
}

TEST_CASE("min_vertex_separator on the standard small graphs") {
    Graph p3 = path_graph(3);
    SeparatorResult mid = min_vertex_separator(p3, 0, 2);
    CHECK(mid.separator == VertexSet{1});
    CHECK(mid.value == 1);

    Graph two_parts(4, {{0, 1}, {2, 3}});
    SeparatorResult none = min_vertex_separator(two_parts, 0, 2);
    CHECK(none.separator.empty());
    CHECK(none.value == 0);

    Graph c4 = cycle_graph(4);
    SeparatorResult diag = min_vertex_separator(c4, 0, 2);
    CHECK(diag.separator == VertexSet{1, 3});
    CHECK(diag.value == 2);

    CHECK_THROWS_AS(min_vertex_separator(p3, 0, 1), InputError);
}

TEST_CASE("lambda equals the path-packing oracle on random graphs") {
    OracleBudget budget{8, 8};
    for (int i = 0; i < 20; ++i) {
        Graph g = erdos_renyi(4 + i % 5, 0.2 + 0.1 * (i % 7), 5100 + i);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                CHECK(lambda(g, u, v) == max_disjoint_paths_naive(g, u, v, budget));
    }
}

TEST_CASE("min_vertex_separator satisfies Menger duality and separates") {
    for (int i = 0; i < 20; ++i) {
        Graph g = erdos_renyi(5 + i % 4, 0.2 + 0.1 * (i % 6), 5200 + i);
        for (int p = 0; p < g.vertex_count(); ++p) {
            for (int q = p + 1; q < g.vertex_count(); ++q) {
                if (g.has_edge(p, q)) continue;
                SeparatorResult r = min_vertex_separator(g, p, q);
                CHECK(static_cast<int>(r.separator.size()) == r.value);
                CHECK(r.value == lambda(g, p, q));
                CHECK(!set_contains(r.separator, p));
                CHECK(!set_contains(r.separator, q));
                VertexSet rest;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!set_contains(r.separator, v)) rest.push_back(v);
                bool together = false;
                for (const VertexSet& comp : connected_components_within(g, rest))
                    if (set_contains(comp, p) && set_contains(comp, q)) together = true;
                CHECK(!together);
            }
        }
    }
}

TEST_CASE("lambda is monotone under edge addition") {
    for (int i = 0; i < 12; ++i) {
        Graph g = erdos_renyi(6, 0.3, 5300 + i);
        for (int u = 0; u < 6; ++u) {
            for (int v = u + 1; v < 6; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph plus = g.with_edge(u, v);
                for (int p = 0; p < 6; ++p)
                    for (int q = p + 1; q < 6; ++q)
                        CHECK(lambda(plus, p, q) >= lambda(g, p, q));
            }
        }
    }
}
