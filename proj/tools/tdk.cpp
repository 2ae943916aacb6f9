// Command-line front end: treedepth, decompositions, connectivity, the
// kernelization pipeline, the set-cover gadget, oracles, verification modes,
// and seeded instance generation. Exit codes: 0 success, 1 negative verdict,
// 2 input error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdk/connectivity.hpp"
#include "tdk/decompose.hpp"
#include "tdk/gen.hpp"
#include "tdk/io.hpp"
#include "tdk/kernel.hpp"
#include "tdk/lowerbound.hpp"
#include "tdk/modulator.hpp"
#include "tdk/oracles.hpp"
#include "tdk/reduce.hpp"
#include "tdk/treedepth.hpp"

using nlohmann::json;

namespace {

json one_based(const tdk::VertexSet& s) {
    json out = json::array();
    for (int v : s) out.push_back(v + 1);
    return out;
}

json one_based_sets(const std::vector<tdk::VertexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(one_based(s));
    return out;
}

void emit(const json& report, const std::string& report_path) {
    if (report_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(report_path);
        if (!out) throw tdk::InputError("cannot write report file " + report_path);
        out << report.dump(2) << "\n";
    }
}

json bound_checks_json(const tdk::SizeReport& report) {
    json bounds = json::array();
    for (const auto& check : report.checks)
        bounds.push_back({{"id", check.id},
                          {"measured", check.measured},
                          {"bound", static_cast<double>(check.bound)},
                          {"pass", check.pass}});
    return bounds;
}

struct CorpusCase {
    tdk::Graph graph;
    int eta = 1;
    int k = 0;
    std::string name;
};

// Deterministic mixed corpus: Erdős–Rényi sweeps and planted instances over
// eta in {1,2} and k in 0..3, sized for the exact oracle.
std::vector<CorpusCase> build_corpus(int count, std::uint64_t seed, int max_n) {
    std::vector<CorpusCase> cases;
    int i = 0;
    while (static_cast<int>(cases.size()) < count) {
        const std::uint64_t s = seed + 1000003ULL * static_cast<std::uint64_t>(i);
        const int eta = 1 + i % 2;
        const int k = i % 4;
        CorpusCase c;
        c.eta = eta;
        c.k = k;
        if (i % 3 == 2) {
            const int base = 2 + i % 5;
            tdk::PlantedInstance planted = tdk::planted_instance(base, k, eta, s);
            if (planted.graph.vertex_count() <= max_n) {
                c.graph = planted.graph;
                c.name = "planted-" + std::to_string(i);
                cases.push_back(c);
            }
        } else {
            const int n = 4 + i % (std::max(1, max_n - 3));
            const double p = 0.15 + 0.1 * (i % 7);
            c.graph = tdk::erdos_renyi(n, p, s);
            c.name = "er-" + std::to_string(i);
            cases.push_back(c);
        }
        ++i;
    }
    return cases;
}

int run_corpus(int count, std::uint64_t seed, int max_n, int workers, const std::string& report_path) {
    std::vector<CorpusCase> cases = build_corpus(count, seed, max_n);
    tdk::OracleBudget budget;
    budget.max_vertices = max_n;
    budget.max_subset_size = std::max(8, max_n);

    std::vector<json> rows(cases.size());
    std::atomic<size_t> cursor{0};
    std::atomic<int> mismatches{0};
    auto worker = [&]() {
        for (;;) {
            const size_t at = cursor.fetch_add(1);
            if (at >= cases.size()) return;
            const CorpusCase& c = cases[at];
            json row{{"name", c.name}, {"n", c.graph.vertex_count()}, {"eta", c.eta}, {"k", c.k}};
            try {
                tdk::KernelOptions options;
                options.oracle_budget = budget;
                tdk::KernelResult result = tdk::kernelize(c.graph, c.k, c.eta, options);
                bool kernel_yes;
                if (result.verdict == tdk::KernelVerdict::TrivialNo) {
                    kernel_yes = false;
                } else {
                    kernel_yes = tdk::exact_td_deletion(result.reduced_graph, c.eta, result.k, budget)
                                     .has_value();
                }
                const bool oracle_yes =
                    tdk::exact_td_deletion(c.graph, c.eta, c.k, budget).has_value();
                row["kernel_solvable"] = kernel_yes;
                row["oracle_solvable"] = oracle_yes;
                row["match"] = kernel_yes == oracle_yes;
                if (kernel_yes != oracle_yes) ++mismatches;
            } catch (const std::exception& e) {
                row["error"] = e.what();
                ++mismatches;
            }
            rows[at] = std::move(row);
        }
    };
    if (workers < 1) workers = 1;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    json report{{"mode", "corpus"},
                {"count", static_cast<int>(cases.size())},
                {"mismatches", mismatches.load()},
                {"cases", rows}};
    emit(report, report_path);
    return mismatches.load() == 0 ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"treedepth-eta deletion kernelization toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, report_path, family_path, roles_path, decomp_path, mode;
    int eta = 1, k = 0, u = 1, v = 2, n = 0, d = 3, cap = -1;
    int max_vertices = 12, max_subset = 8, count = 50, workers = 1, base = 4, max_n = 10;
    double p = 0.3;
    std::uint64_t seed = 0;
    bool want_separator = false, planted = false;

    auto* td_cmd = app.add_subcommand("td", "exact treedepth of a graph file");
    td_cmd->add_option("--in", in_path)->required();
    td_cmd->add_option("--cap", cap, "report exceeded when treedepth is larger");
    td_cmd->add_option("--decomp", decomp_path, "write a minimum-height nice decomposition");

    auto* decomp_cmd = app.add_subcommand("decomp", "minimum-height nice decomposition");
    decomp_cmd->add_option("--in", in_path)->required();
    decomp_cmd->add_option("--out", out_path);
    decomp_cmd->add_option("--cap", cap);

    auto* lambda_cmd = app.add_subcommand("lambda", "internally disjoint path count");
    lambda_cmd->add_option("--in", in_path)->required();
    lambda_cmd->add_option("--u", u, "first endpoint, 1-based")->required();
    lambda_cmd->add_option("--v", v, "second endpoint, 1-based")->required();
    lambda_cmd->add_flag("--separator", want_separator, "also emit a minimum separator");

    auto* modulator_cmd = app.add_subcommand("modulator", "obstruction-hitting modulator");
    modulator_cmd->add_option("--in", in_path)->required();
    modulator_cmd->add_option("--eta", eta)->required();
    modulator_cmd->add_option("--k", k)->required();
    modulator_cmd->add_option("--report", report_path);

    auto* decompose_cmd = app.add_subcommand("decompose", "pipeline decomposition stage");
    decompose_cmd->add_option("--in", in_path)->required();
    decompose_cmd->add_option("--eta", eta)->required();
    decompose_cmd->add_option("--k", k)->required();
    decompose_cmd->add_option("--report", report_path);
    decompose_cmd->add_option("--out-graph", out_path);
    decompose_cmd->add_option("--out-forest", decomp_path);

    auto* kernelize_cmd = app.add_subcommand("kernelize", "full kernelization pipeline");
    kernelize_cmd->add_option("--in", in_path)->required();
    kernelize_cmd->add_option("--eta", eta)->required();
    kernelize_cmd->add_option("--k", k)->required();
    kernelize_cmd->add_option("--out", out_path, "write the kernel graph");
    kernelize_cmd->add_option("--report", report_path);
    kernelize_cmd->add_option("--trace", decomp_path, "write the reduction trace (JSON lines)");

    auto* lowerbound_cmd = app.add_subcommand("lowerbound", "set-cover hardness gadget");
    lowerbound_cmd->add_option("--n", n)->required();
    lowerbound_cmd->add_option("--d", d)->required();
    lowerbound_cmd->add_option("--k", k)->required();
    lowerbound_cmd->add_option("--family", family_path)->required();
    lowerbound_cmd->add_option("--out", out_path, "write the gadget graph");
    lowerbound_cmd->add_option("--roles", roles_path, "write the vertex-role sidecar");
    lowerbound_cmd->add_option("--report", report_path);

    auto* solve_cmd = app.add_subcommand("solve-exact", "oracle deletion solver");
    solve_cmd->add_option("--in", in_path)->required();
    solve_cmd->add_option("--eta", eta)->required();
    solve_cmd->add_option("--k", k)->required();
    solve_cmd->add_option("--max-vertices", max_vertices);
    solve_cmd->add_option("--max-subset", max_subset);
    solve_cmd->add_option("--report", report_path);

    auto* verify_cmd = app.add_subcommand("verify", "bidirectional verification modes");
    verify_cmd->add_option("--mode", mode, "gadget or corpus")->required();
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--d", d);
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--family", family_path);
    verify_cmd->add_option("--max-vertices", max_vertices)->default_val(64);
    verify_cmd->add_option("--count", count);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--max-n", max_n, "corpus: largest instance");
    verify_cmd->add_option("--workers", workers);
    verify_cmd->add_option("--report", report_path);

    auto* gen_cmd = app.add_subcommand("gen-random", "seeded instance generator");
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--p", p);
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_flag("--planted", planted, "planted-optimum instance instead of G(n,p)");
    gen_cmd->add_option("--base", base, "planted: base vertices");
    gen_cmd->add_option("--k", k, "planted: number of planted obstructions");
    gen_cmd->add_option("--eta", eta, "planted: height budget");
    gen_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help-style exits keep code 0; any flag misuse is an input error.
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (td_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        const int effective_cap = cap < 0 ? g.vertex_count() : cap;
        tdk::TdResult r = tdk::treedepth_exact(g, effective_cap);
        if (r.exceeds_cap) {
            std::cout << "exceeds " << effective_cap << "\n";
            return 1;
        }
        std::cout << r.value << "\n";
        if (!decomp_path.empty()) {
            auto nice = tdk::min_height_nice_decomposition(g, effective_cap);
            tdk::write_decomposition_file(decomp_path, nice.forest);
        }
        return 0;
    }

    if (decomp_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        const int effective_cap = cap < 0 ? g.vertex_count() : cap;
        auto nice = tdk::min_height_nice_decomposition(g, effective_cap);
        if (nice.exceeds_cap) {
            std::cout << "exceeds " << effective_cap << "\n";
            return 1;
        }
        std::cout << nice.forest.height() << "\n";
        if (!out_path.empty()) tdk::write_decomposition_file(out_path, nice.forest);
        return 0;
    }

    if (lambda_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
            throw tdk::InputError("endpoints must be within the graph");
        const int value = tdk::lambda(g, u - 1, v - 1);
        if (!want_separator) {
            std::cout << value << "\n";
            return 0;
        }
        tdk::SeparatorResult sep = tdk::min_vertex_separator(g, u - 1, v - 1);
        emit(json{{"lambda", value}, {"separator", one_based(sep.separator)}}, report_path);
        return 0;
    }

    if (modulator_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        tdk::ModulatorOutcome outcome = tdk::approx_modulator(g, eta, k);
        json report{{"too_costly", outcome.too_costly}};
        if (outcome.too_costly) {
            report["certificate"] = one_based_sets(outcome.certificate);
        } else {
            report["modulator"] = one_based(outcome.result.modulator);
            report["iterations"] = outcome.result.iterations;
            report["obstruction_sizes"] = outcome.result.obstruction_sizes;
        }
        emit(report, report_path);
        return outcome.too_costly ? 1 : 0;
    }

    if (decompose_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        tdk::DecomposeOutcome outcome = tdk::decompose(g, eta, k);
        if (outcome.no_instance) {
            emit(json{{"no_instance", true}, {"certificate", one_based_sets(outcome.certificate)}},
                 report_path);
            return 1;
        }
        const tdk::DecompositionBundle& b = outcome.bundle;
        tdk::BundleReport checks = tdk::check_bundle(b);
        json props = json::array();
        for (const auto& c : checks.checks)
            props.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
        emit(json{{"no_instance", false},
                  {"n", b.graph.vertex_count()},
                  {"modulator", one_based(b.modulator)},
                  {"closure", one_based(b.separator_closure)},
                  {"tops", one_based(b.tops)},
                  {"properties", props},
                  {"all_pass", checks.all_pass}},
             report_path);
        if (!out_path.empty()) tdk::write_graph_file(out_path, b.graph);
        if (!decomp_path.empty()) tdk::write_decomposition_file(decomp_path, b.forest);
        return 0;
    }

    if (kernelize_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        tdk::KernelResult result = tdk::kernelize(g, k, eta);
        json report{{"eta", result.eta}, {"k", result.k}};
        if (result.verdict == tdk::KernelVerdict::TrivialNo) {
            report["verdict"] = "TrivialNo";
            report["certificate"] = one_based_sets(result.certificate);
        } else {
            report["verdict"] = "Kernel";
            report["sizes"] = {{"modulator", result.stats.s_size},
                               {"closure", result.stats.y_size},
                               {"tops", result.stats.tops},
                               {"final_n", result.stats.final_n},
                               {"measured_b", result.stats.measured_b}};
            tdk::SizeReport bounds = tdk::size_report(result);
            report["bounds"] = bound_checks_json(bounds);
            report["c_eta"] = static_cast<double>(bounds.c_eta);
        }
        if (!decomp_path.empty()) {
            std::ofstream trace_out(decomp_path);
            if (!trace_out) throw tdk::InputError("cannot write trace file " + decomp_path);
            trace_out << tdk::trace_to_json_lines(result.trace);
            report["trace_path"] = decomp_path;
        }
        if (!out_path.empty()) tdk::write_graph_file(out_path, result.reduced_graph);
        emit(report, report_path);
        return result.verdict == tdk::KernelVerdict::TrivialNo ? 1 : 0;
    }

    if (lowerbound_cmd->parsed()) {
        tdk::SetCoverInstance inst;
        inst.n = n;
        inst.d = d;
        inst.k = k;
        inst.family = tdk::read_family_file(family_path, n);
        tdk::GadgetGraph gadget = tdk::construct(inst);
        if (!out_path.empty()) tdk::write_graph_file(out_path, gadget.graph);
        if (!roles_path.empty()) {
            json roles = json::array();
            for (int vertex = 0; vertex < gadget.graph.vertex_count(); ++vertex) {
                const tdk::VertexRole& role = gadget.roles[vertex];
                json entry{{"vertex", vertex + 1}};
                switch (role.kind) {
                    case tdk::VertexRole::Kind::Matrix:
                        entry["kind"] = "matrix";
                        entry["row"] = role.i + 1;
                        entry["column"] = role.j + 1;
                        break;
                    case tdk::VertexRole::Kind::Dummy:
                        entry["kind"] = "dummy";
                        entry["row"] = role.i + 1;
                        entry["index"] = role.index;
                        break;
                    case tdk::VertexRole::Kind::Enforcer:
                        entry["kind"] = "enforcer";
                        entry["column"] = role.j + 1;
                        entry["missing_set"] = one_based(role.x);
                        break;
                }
                roles.push_back(entry);
            }
            std::ofstream roles_out(roles_path);
            if (!roles_out) throw tdk::InputError("cannot write roles file " + roles_path);
            roles_out << roles.dump(2) << "\n";
        }
        emit(json{{"vertices", gadget.graph.vertex_count()},
                  {"edges", gadget.graph.edge_count()},
                  {"k_prime", gadget.k_prime},
                  {"degenerate", gadget.degenerate},
                  {"cover_size", static_cast<int>(gadget.explicit_cover.size())}},
             report_path);
        return 0;
    }

    if (solve_cmd->parsed()) {
        tdk::Graph g = tdk::read_graph_file(in_path);
        tdk::OracleBudget budget;
        budget.max_vertices = max_vertices;
        budget.max_subset_size = max_subset;
        auto witness = tdk::exact_td_deletion(g, eta, k, budget);
        emit(json{{"solvable", witness.has_value()},
                  {"witness", witness ? one_based(*witness) : json::array()}},
             report_path);
        return witness ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
        if (mode == "gadget") {
            tdk::SetCoverInstance inst;
            inst.n = n;
            inst.d = d;
            inst.k = k;
            inst.family = family_path.empty() ? std::vector<tdk::VertexSet>{}
                                              : tdk::read_family_file(family_path, n);
            tdk::OracleBudget budget;
            budget.max_vertices = max_vertices;
            tdk::GadgetVerdict verdict = tdk::verify_gadget(inst, budget);
            emit(json{{"mode", "gadget"},
                      {"confirmed", verdict.confirmed},
                      {"cover_exists", verdict.cover_exists},
                      {"deletion_exists", verdict.deletion_exists},
                      {"detail", verdict.detail}},
                 report_path);
            std::cout << (verdict.confirmed ? "Confirmed" : "Counterexample") << "\n";
            return verdict.confirmed ? 0 : 1;
        }
        if (mode == "corpus") return run_corpus(count, seed, max_n, workers, report_path);
        throw tdk::InputError("unknown verify mode '" + mode + "'");
    }

    if (gen_cmd->parsed()) {
        tdk::Graph g;
        if (planted) {
            g = tdk::planted_instance(base, k, eta, seed).graph;
        } else {
            if (n <= 0) throw tdk::InputError("--n is required for G(n,p) generation");
            g = tdk::erdos_renyi(n, p, seed);
        }
        if (out_path.empty()) {
            tdk::write_graph(std::cout, g);
        } else {
            tdk::write_graph_file(out_path, g);
        }
        return 0;
    }

    throw tdk::InputError("no subcommand handled");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const tdk::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
