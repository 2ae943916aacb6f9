#pragma once

#include <iosfwd>
#include <string>

#include "tdk/decomposition.hpp"
#include "tdk/graph.hpp"

namespace tdk {

// DIMACS-like graph text: header "p edge <n> <m>", one "e <u> <v>" line per
// edge with 1-based ids, "c" comment lines anywhere. The writer emits edges
// sorted by (min endpoint, max endpoint), so write(read(write(g))) is
// byte-identical to write(g).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// Forest text: header "p tdd <n>", one "<v> <parent>" line per present
// vertex, 1-based, parent 0 for roots. Absent vertices have no line.
TreedepthDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const TreedepthDecomposition& f);
TreedepthDecomposition read_decomposition_file(const std::string& path);
void write_decomposition_file(const std::string& path, const TreedepthDecomposition& f);

// One set per line, space-separated 1-based elements; "c" comments and blank
// lines are skipped. Returned sets are 0-based and sorted.
std::vector<VertexSet> read_family(std::istream& in, int universe_size);
std::vector<VertexSet> read_family_file(const std::string& path, int universe_size);

}  // namespace tdk
