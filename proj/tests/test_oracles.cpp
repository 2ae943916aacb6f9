#include "doctest.h"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"
#include "tdk/oracles.hpp"
#include "tdk/treedepth.hpp"

using namespace tdk;

TEST_CASE("exact_td_deletion on the standard small instances") {
    Graph c4 = cycle_graph(4);
    auto hit = exact_td_deletion(c4, 1, 2);
    REQUIRE(hit.has_value());
    CHECK(*hit == VertexSet{0, 2});  // canonical: smallest, then lexicographic

    CHECK(!exact_td_deletion(complete_graph(3), 2, 0).has_value());

    auto empty = exact_td_deletion(Graph(0), 1, 0);
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    CHECK_THROWS_AS(exact_td_deletion(complete_graph(13), 1, 1, OracleBudget{12, 8}),
                    BudgetError);
}

TEST_CASE("exact_td_deletion witnesses are genuine and minimum") {
    for (int i = 0; i < 15; ++i) {
        Graph g = erdos_renyi(4 + i % 6, 0.2 + 0.1 * (i % 7), 6100 + i);
        for (int eta = 1; eta <= 2; ++eta) {
            for (int k = 0; k <= 2; ++k) {
                auto z = exact_td_deletion(g, eta, k);
                if (!z.has_value()) continue;
                CHECK(static_cast<int>(z->size()) <= k);
                VertexSet rest;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!set_contains(*z, v)) rest.push_back(v);
                CHECK(treedepth_at_most(induced_subgraph(g, rest).graph, eta));
                if (!z->empty())
                    CHECK(!exact_td_deletion(g, eta, static_cast<int>(z->size()) - 1).has_value());
            }
        }
    }
}

TEST_CASE("exact_set_cover on the standard small instances") {
    auto one = exact_set_cover(3, {{0, 1, 2}}, 1);
    REQUIRE(one.has_value());
    CHECK(*one == std::vector<int>{0});

    CHECK(!exact_set_cover(3, {{0, 1, 2}}, 2).has_value());  // must use exactly n/d sets

    auto pick = exact_set_cover(6, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}}, 2);
    REQUIRE(pick.has_value());
    CHECK(*pick == std::vector<int>{0, 2});

    CHECK_THROWS_AS(exact_set_cover(6, {{0, 1, 2}, {3, 4}}, 2), InputError);
}

TEST_CASE("clique minors on the standard small graphs, with monotonicity") {
    CHECK(has_clique_minor(complete_graph(4), 4));
    CHECK(!has_clique_minor(path_graph(6), 3));  // forests have no K_3 minor
    CHECK(has_clique_minor(cycle_graph(4), 3));  // contract one edge

    auto model = find_clique_minor(cycle_graph(4), 3);
    REQUIRE(model.has_value());
    CHECK(model->size() == 3);

    for (int i = 0; i < 10; ++i) {
        Graph g = erdos_renyi(7, 0.4, 6200 + i);
        for (int t = 2; t <= 4; ++t)
            if (has_clique_minor(g, t + 1)) CHECK(has_clique_minor(g, t));
    }
}

TEST_CASE("has_path_with on the standard small graphs") {
    CHECK(has_path_with(path_graph(5), 5));
    CHECK(!has_path_with(complete_graph(3), 4));
    Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!has_path_with(claw, 4));
    CHECK(has_path_with(claw, 3));
}

TEST_CASE("path packing and vertex cover oracles") {
    CHECK(max_disjoint_paths_naive(cycle_graph(4), 0, 2) == 2);
    CHECK(max_disjoint_paths_naive(complete_graph(4), 0, 1) == 3);

    CHECK(min_vertex_cover_naive(cycle_graph(4)) == VertexSet{0, 2});
    CHECK(min_vertex_cover_naive(Graph(3)).empty());
}

TEST_CASE("treedepth-1 deletion coincides with vertex cover") {
    OracleBudget budget{10, 10};
    for (int i = 0; i < 15; ++i) {
        Graph g = erdos_renyi(5 + i % 5, 0.25 + 0.1 * (i % 6), 6300 + i);
        VertexSet vc = min_vertex_cover_naive(g, budget);
        auto z = exact_td_deletion(g, 1, g.vertex_count(), budget);
        REQUIRE(z.has_value());
        CHECK(z->size() == vc.size());
    }
}

TEST_CASE("subset enumeration is ascending by size, then lexicographic") {
    std::vector<VertexSet> seen;
    for_each_subset_by_size(3, 2, [&](const VertexSet& s) {
        seen.push_back(s);
        return false;
    });
    std::vector<VertexSet> expect{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    CHECK(seen == expect);

    // Early stop on a true return.
    int visits = 0;
    for_each_subset_by_size(5, 5, [&](const VertexSet&) { return ++visits == 3; });
    CHECK(visits == 3);
}

TEST_CASE("TdOracle agrees with treedepth_exact on random graphs") {
    for (int i = 0; i < 20; ++i) {
        Graph g = erdos_renyi(4 + i % 6, 0.2 + 0.1 * (i % 7), 6400 + i);
        TdResult fast = treedepth_exact(g, g.vertex_count());
        REQUIRE(!fast.exceeds_cap);
        CHECK(treedepth_naive(g, OracleBudget{10, 8}) == fast.value);
    }
}
