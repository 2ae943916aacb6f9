#include <algorithm>

#include "doctest.h"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"

using namespace tdk;

TEST_CASE("graph construction enforces symmetry, no self-loops, no duplicates") {
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.degree(1) == 2);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), InputError);
}

TEST_CASE("with_edge and without_edge are inverse and validate") {
    Graph g = path_graph(3);
    Graph plus = g.with_edge(0, 2);
    CHECK(plus.has_edge(0, 2));
    CHECK(!g.has_edge(0, 2));  // value semantics: the original is untouched
    CHECK(plus.without_edge(0, 2) == g);

    CHECK_THROWS_AS(g.with_edge(0, 1), InputError);     // already present
    CHECK_THROWS_AS(g.without_edge(0, 2), InputError);  // not present
}

TEST_CASE("neighborhood: open and closed") {
    Graph tri = complete_graph(3);
    CHECK(neighborhood(tri, {0}, false) == VertexSet{1, 2});
    CHECK(neighborhood(tri, {0}, true) == VertexSet{0, 1, 2});
    CHECK(neighborhood(tri, {}, false) == VertexSet{});

    Graph p3 = path_graph(3);  // 0 - 1 - 2
    CHECK(neighborhood(p3, {0, 2}, false) == VertexSet{1});

    CHECK_THROWS_AS(neighborhood(tri, {7}, false), InputError);
}

TEST_CASE("connected_components: empty, path, two edges; output is a partition") {
    CHECK(connected_components(Graph(0)).empty());

    Graph p3 = path_graph(3);
    CHECK(connected_components(p3) == std::vector<VertexSet>{{0, 1, 2}});

    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2, 3});

    Graph rnd = erdos_renyi(11, 0.2, 99);
    auto parts = connected_components(rnd);
    VertexSet all;
    for (const auto& part : parts) {
        CHECK(!part.empty());
        for (int v : part) all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    VertexSet expect(rnd.vertex_count());
    for (int v = 0; v < rnd.vertex_count(); ++v) expect[v] = v;
    CHECK(all == expect);  // disjoint union of the parts is V(g)
}

TEST_CASE("connected_components_within and is_connected_within") {
    Graph p4 = path_graph(4);
    auto comps = connected_components_within(p4, {0, 1, 3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{3});
    CHECK(is_connected_within(p4, {1, 2, 3}));
    CHECK(!is_connected_within(p4, {0, 3}));
}

TEST_CASE("induced_subgraph: K_4 minus a vertex, empty set, C_4 diagonal") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {0, 2, 3});
    CHECK(sub.graph == complete_graph(3));
    CHECK(sub.old_ids == std::vector<int>{0, 2, 3});

    CHECK(induced_subgraph(k4, {}).graph == Graph(0));

    Graph c4 = cycle_graph(4);  // 0-1-2-3-0
    auto diag = induced_subgraph(c4, {0, 2});
    CHECK(diag.graph.vertex_count() == 2);
    CHECK(diag.graph.edge_count() == 0);

    // Full vertex set: the identity id-map and an equal graph.
    auto full = induced_subgraph(k4, {0, 1, 2, 3});
    CHECK(full.graph == k4);
    CHECK(full.old_ids == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("delete_vertices and isolate_vertices") {
    Graph p3 = path_graph(3);
    Graph no_mid = delete_vertices(p3, {1});
    CHECK(no_mid.vertex_count() == 2);
    CHECK(no_mid.edge_count() == 0);

    CHECK(delete_vertices(p3, {}) == p3);

    // isolate keeps the id space so snapshots stay comparable
    Graph iso = isolate_vertices(p3, {1});
    CHECK(iso.vertex_count() == 3);
    CHECK(iso.edge_count() == 0);
}

TEST_CASE("set helpers") {
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_intersection({1, 3, 5}, {3, 4, 5}) == VertexSet{3, 5});
    CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(set_contains({1, 4}, 4));
    CHECK(!set_contains({1, 4}, 2));
    CHECK(is_subset({2, 4}, {1, 2, 3, 4}));
    CHECK(!is_subset({2, 5}, {1, 2, 3, 4}));
    CHECK(is_sorted_set({0, 2, 9}));
    CHECK(!is_sorted_set({2, 2}));
    CHECK(!is_sorted_set({3, 1}));
}

TEST_CASE("is_clique") {
    Graph k4 = complete_graph(4);
    CHECK(is_clique(k4, {0, 1, 3}));
    CHECK(is_clique(k4, {}));
    CHECK(is_clique(k4, {2}));
    Graph c4 = cycle_graph(4);
    CHECK(!is_clique(c4, {0, 1, 2}));
}

TEST_CASE("named constructions") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cycle_graph(4).has_edge(3, 0));
}
