#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tdk/decomposition.hpp"
#include "tdk/gen.hpp"
#include "tdk/graph.hpp"
#include "tdk/io.hpp"

using namespace tdk;

TEST_CASE("graph files round-trip and the writer is byte-stable") {
    Graph p7 = read_graph_file(data_path("p7.gr"));
    CHECK(p7 == path_graph(7));

    Graph two = read_graph_file(data_path("two_triangles.gr"));
    CHECK(two.vertex_count() == 6);
    CHECK(two.edge_count() == 6);

    Graph rnd = erdos_renyi(9, 0.4, 5);
    std::ostringstream first;
    write_graph(first, rnd);
    std::istringstream back(first.str());
    Graph again = read_graph(back);
    CHECK(again == rnd);
    std::ostringstream second;
    write_graph(second, again);
    CHECK(second.str() == first.str());
}

TEST_CASE("graph reader accepts comments and rejects malformed input") {
    std::istringstream ok("c a comment\np edge 3 1\nc another\ne 1 3\n");
    Graph g = read_graph(ok);
    CHECK(g.vertex_count() == 3);
    CHECK(g.has_edge(0, 2));

    std::istringstream bad_header("q edge 3 1\ne 1 2\n");
    CHECK_THROWS_AS(read_graph(bad_header), InputError);

    std::istringstream out_of_range("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(read_graph(out_of_range), InputError);

    std::istringstream self_loop("p edge 3 1\ne 2 2\n");
    CHECK_THROWS_AS(read_graph(self_loop), InputError);
}

TEST_CASE("decomposition files round-trip, absent vertices have no line") {
    TreedepthDecomposition f(5);
    f.set_parent(0, TreedepthDecomposition::ROOT);
    f.set_parent(2, 0);
    f.set_parent(3, 2);

    std::ostringstream out;
    write_decomposition(out, f);
    CHECK(out.str().rfind("p tdd 5", 0) == 0);

    std::istringstream in(out.str());
    TreedepthDecomposition g = read_decomposition(in);
    CHECK(g == f);
    CHECK(!g.present(1));
    CHECK(!g.present(4));
}

TEST_CASE("family files: 1-based input, sorted 0-based output, comments skipped") {
    std::istringstream in("c family\n1 2 3\n\n4 2\n");
    auto fam = read_family(in, 6);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0] == VertexSet{0, 1, 2});
    CHECK(fam[1] == VertexSet{1, 3});

    std::istringstream bad("1 9\n");
    CHECK_THROWS_AS(read_family(bad, 6), InputError);
}
