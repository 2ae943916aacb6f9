#include "tdk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tdk {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line_no, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) parse_fail(line_no, "expected an integer, got '" + tok + "'");
    return value;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) parse_fail(line_no, "second header line");
            if (toks.size() != 4 || toks[1] != "edge") parse_fail(line_no, "expected 'p edge <n> <m>'");
            n = parse_int(toks[2], line_no);
            declared_m = parse_int(toks[3], line_no);
            if (n < 0 || declared_m < 0) parse_fail(line_no, "negative size in header");
        } else if (toks[0] == "e") {
            if (n < 0) parse_fail(line_no, "edge before header");
            if (toks.size() != 3) parse_fail(line_no, "expected 'e <u> <v>'");
            int u = parse_int(toks[1], line_no);
            int v = parse_int(toks[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) parse_fail(line_no, "self-loop at " + std::to_string(u));
            int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
            if (seen.empty()) seen.assign(n, std::vector<char>());
            if (seen[a].empty()) seen[a].assign(n, 0);
            if (seen[a][b]) parse_fail(line_no, "duplicate edge");
            seen[a][b] = 1;
            edges.emplace_back(a, b);
        } else {
            parse_fail(line_no, "unrecognized line '" + toks[0] + " ...'");
        }
    }
    if (n < 0) throw InputError("missing 'p edge' header");
    if (static_cast<long>(edges.size()) != declared_m)
        throw InputError("header declares " + std::to_string(declared_m) + " edges, file has " +
                         std::to_string(edges.size()));
    return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

TreedepthDecomposition read_decomposition(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<int> parent;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) parse_fail(line_no, "second header line");
            if (toks.size() != 3 || toks[1] != "tdd") parse_fail(line_no, "expected 'p tdd <n>'");
            n = parse_int(toks[2], line_no);
            if (n < 0) parse_fail(line_no, "negative size in header");
            parent.assign(n, TreedepthDecomposition::ABSENT);
        } else {
            if (n < 0) parse_fail(line_no, "entry before header");
            if (toks.size() != 2) parse_fail(line_no, "expected '<v> <parent>'");
            int v = parse_int(toks[0], line_no);
            int p = parse_int(toks[1], line_no);
            if (v < 1 || v > n) parse_fail(line_no, "vertex id out of range");
            if (p < 0 || p > n) parse_fail(line_no, "parent id out of range");
            if (parent[v - 1] != TreedepthDecomposition::ABSENT)
                parse_fail(line_no, "repeated vertex " + std::to_string(v));
            parent[v - 1] = (p == 0) ? TreedepthDecomposition::ROOT : p - 1;
        }
    }
    if (n < 0) throw InputError("missing 'p tdd' header");
    return TreedepthDecomposition(std::move(parent));
}

void write_decomposition(std::ostream& out, const TreedepthDecomposition& f) {
    out << "p tdd " << f.universe_size() << '\n';
    for (int v = 0; v < f.universe_size(); ++v)
        if (f.present(v))
            out << v + 1 << ' ' << (f.is_root(v) ? 0 : f.parent(v) + 1) << '\n';
}

TreedepthDecomposition read_decomposition_file(const std::string& path) {
    auto in = open_input(path);
    return read_decomposition(in);
}

void write_decomposition_file(const std::string& path, const TreedepthDecomposition& f) {
    auto out = open_output(path);
    write_decomposition(out, f);
}

std::vector<VertexSet> read_family(std::istream& in, int universe_size) {
    std::string line;
    int line_no = 0;
    std::vector<VertexSet> out;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        VertexSet set;
        for (const auto& tok : toks) {
            int x = parse_int(tok, line_no);
            if (x < 1 || x > universe_size)
                parse_fail(line_no, "element out of range 1.." + std::to_string(universe_size));
            set.push_back(x - 1);
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            parse_fail(line_no, "repeated element in set");
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<VertexSet> read_family_file(const std::string& path, int universe_size) {
    auto in = open_input(path);
    return read_family(in, universe_size);
}

}  // namespace tdk
