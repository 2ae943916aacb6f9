#include "doctest.h"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"
#include "tdk/oracles.hpp"

using namespace tdk;

TEST_CASE("erdos_renyi is deterministic in the seed and respects p extremes") {
    Graph a = erdos_renyi(10, 0.4, 12345);
    Graph b = erdos_renyi(10, 0.4, 12345);
    CHECK(a == b);

    Graph c = erdos_renyi(10, 0.4, 12346);
    CHECK(!(a == c));

    CHECK(erdos_renyi(8, 0.0, 7).edge_count() == 0);
    CHECK(erdos_renyi(8, 1.0, 7) == complete_graph(8));
}

TEST_CASE("planted instances have the promised size and optimum") {
    PlantedInstance inst = planted_instance(4, 2, 1, 99);
    CHECK(inst.eta == 1);
    CHECK(inst.optimum == 2);
    CHECK(inst.graph.vertex_count() == 4 + 2 * 3);  // base + k paths on 2^{eta+1}-1 vertices

    PlantedInstance again = planted_instance(4, 2, 1, 99);
    CHECK(again.graph == inst.graph);

    OracleBudget budget{14, 8};
    SUBCASE("eta=1 instances") {
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            PlantedInstance p = planted_instance(4, 2, 1, seed);
            CHECK(exact_td_deletion(p.graph, 1, p.optimum, budget).has_value());
            CHECK(!exact_td_deletion(p.graph, 1, p.optimum - 1, budget).has_value());
        }
    }
    SUBCASE("eta=2 instances") {
        for (std::uint64_t seed : {4ULL, 5ULL}) {
            PlantedInstance p = planted_instance(6, 1, 2, seed);
            CHECK(p.graph.vertex_count() == 6 + 7);
            CHECK(exact_td_deletion(p.graph, 2, 1, budget).has_value());
            CHECK(!exact_td_deletion(p.graph, 2, 0, budget).has_value());
        }
    }
    SUBCASE("k=0 instances are already small") {
        PlantedInstance p = planted_instance(5, 0, 1, 11);
        CHECK(p.graph.vertex_count() == 5);
        CHECK(p.optimum == 0);
        auto z = exact_td_deletion(p.graph, 1, 0, budget);
        REQUIRE(z.has_value());
        CHECK(z->empty());
    }
}
