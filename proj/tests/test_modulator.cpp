#include "doctest.h"
#include "test_util.hpp"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"
#include "tdk/io.hpp"
#include "tdk/modulator.hpp"
#include "tdk/oracles.hpp"
#include "tdk/treedepth.hpp"

using namespace tdk;

TEST_CASE("graphs of small treedepth need no modulator") {
    ModulatorOutcome out = approx_modulator(path_graph(3), 2, 1);
    REQUIRE(!out.too_costly);
    CHECK(out.result.modulator.empty());
    CHECK(out.result.iterations == 0);
}

TEST_CASE("P_3 at eta=1: one obstruction, an edge") {
    ModulatorOutcome out = approx_modulator(path_graph(3), 1, 1);
    REQUIRE(!out.too_costly);
    CHECK(out.result.modulator == VertexSet{1, 2});
    CHECK(out.result.iterations == 1);
    CHECK(out.result.obstruction_sizes == std::vector<int>{2});
    Graph rest = induced_subgraph(path_graph(3), {0}).graph;
    CHECK(treedepth_at_most(rest, 1));
}

TEST_CASE("two disjoint triangles at eta=1, k=1: certified no-instance") {
    Graph two = read_graph_file(data_path("two_triangles.gr"));
    ModulatorOutcome out = approx_modulator(two, 1, 1);
    REQUIRE(out.too_costly);
    REQUIRE(out.certificate.size() == 2);
    CHECK(out.certificate[0] == VertexSet{1, 2});
    CHECK(out.certificate[1] == VertexSet{4, 5});
    for (const VertexSet& obs : out.certificate) {
        CHECK(is_connected_within(two, obs));
        CHECK(!treedepth_at_most(induced_subgraph(two, obs).graph, 1));
    }
    CHECK(set_intersection(out.certificate[0], out.certificate[1]).empty());

    // Soundness: the certificate really proves the oracle answer.
    CHECK(!exact_td_deletion(two, 1, 1).has_value());
}

TEST_CASE("shrink_obstruction finds vertex-minimal oversized subgraphs") {
    // In a triangle, the minimal treedepth->1 obstruction is an edge.
    Graph tri = complete_graph(3);
    CHECK(shrink_obstruction(tri, {0, 1, 2}, 1) == VertexSet{1, 2});

    // In P_7 at eta=2, the minimal obstruction is a P_4.
    Graph p7 = path_graph(7);
    VertexSet obs = shrink_obstruction(p7, {0, 1, 2, 3, 4, 5, 6}, 2);
    CHECK(obs == VertexSet{3, 4, 5, 6});
    CHECK(!treedepth_at_most(induced_subgraph(p7, obs).graph, 2));
    for (int v : obs) {
        VertexSet smaller = set_difference(obs, {v});
        CHECK(treedepth_at_most(induced_subgraph(p7, smaller).graph, 2));
    }
}

TEST_CASE("modulator validity and certificate soundness on random graphs") {
    OracleBudget budget{12, 12};
    for (int i = 0; i < 25; ++i) {
        Graph g = erdos_renyi(5 + i % 6, 0.2 + 0.1 * (i % 7), 7100 + i);
        const int eta = 1 + i % 2;
        const int k = i % 3;
        ModulatorOutcome out = approx_modulator(g, eta, k);
        if (out.too_costly) {
            CHECK(static_cast<int>(out.certificate.size()) == k + 1);
            for (size_t a = 0; a < out.certificate.size(); ++a) {
                CHECK(is_connected_within(g, out.certificate[a]));
                CHECK(!treedepth_at_most(induced_subgraph(g, out.certificate[a]).graph, eta));
                for (size_t b = a + 1; b < out.certificate.size(); ++b)
                    CHECK(set_intersection(out.certificate[a], out.certificate[b]).empty());
            }
            CHECK(!exact_td_deletion(g, eta, k, budget).has_value());
        } else {
            VertexSet rest;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!set_contains(out.result.modulator, v)) rest.push_back(v);
            CHECK(treedepth_at_most(induced_subgraph(g, rest).graph, eta));
            CHECK(out.result.iterations <= static_cast<int>(out.result.modulator.size()));
        }
    }
}

TEST_CASE("eta=1 modulators are within twice the optimum") {
    OracleBudget budget{10, 10};
    for (int i = 0; i < 15; ++i) {
        Graph g = erdos_renyi(5 + i % 5, 0.25 + 0.1 * (i % 6), 7200 + i);
        ModulatorOutcome out = approx_modulator(g, 1, g.vertex_count());
        REQUIRE(!out.too_costly);
        VertexSet opt = min_vertex_cover_naive(g, budget);
        CHECK(out.result.modulator.size() <= 2 * opt.size());
    }
}
