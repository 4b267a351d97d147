// tdom: batch CLI for t-domination analysis, threshold repair, the matrix
// repair engine, the nested-bipartite counterexample and the clique/stable
// bounds. JSON goes to stdout, logs to stderr. Exit codes: 0 success with
// verification, 1 verification failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tdom/bipartite.hpp"
#include "tdom/bounds.hpp"
#include "tdom/errors.hpp"
#include "tdom/graph.hpp"
#include "tdom/io.hpp"
#include "tdom/matrix.hpp"
#include "tdom/oracles.hpp"
#include "tdom/pipeline.hpp"

namespace {

using namespace tdom;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

Verify parse_verify(const std::string& level) {
    if (level == "off") return Verify::off;
    if (level == "post") return Verify::post;
    if (level == "full") return Verify::full;
    throw input_error("unknown verify level '" + level + "'");
}

// min_domination is an exact cubic scan; beyond this size the caller must
// pass --t explicitly.
constexpr int kAutoDominationLimit = 2000;

struct Options {
    std::string input;
    std::string out;
    std::string report;
    std::string verify = "post";
    std::optional<int> t;
    int k = 1;
    bool oracle = false;
    bool tweaked = false;
    int n = 0, m = 0, d = 0;
    std::uint64_t seed = 0;
    std::string kind;
};

void emit(const std::string& json, const std::string& report_path) {
    std::cout << json << '\n';
    if (!report_path.empty()) write_text_file(report_path, json + "\n");
}

int cmd_analyze(const Options& opt) {
    Graph g = read_graph_file(opt.input);
    emit(analyze_json(g), opt.report);
    return 0;
}

int cmd_repair(const Options& opt) {
    Graph g = read_graph_file(opt.input);
    if (!opt.t && g.vertex_count() > kAutoDominationLimit)
        throw input_error("graphs beyond " + std::to_string(kAutoDominationLimit) +
                          " vertices need an explicit --t");
    auto repaired = repair_graph(g, opt.t, parse_verify(opt.verify));
    const std::string out_path = opt.out.empty() ? opt.input + ".repaired" : opt.out;
    write_text_file(out_path, serialize_graph(repaired.graph));
    std::cerr << "repaired graph written to " << out_path << "\n";
    emit(repair_report_json(repaired.report), opt.report);
    return repaired.report.output_threshold && repaired.report.bounds_hold
               ? 0
               : kExitVerificationFailure;
}

int cmd_matrix(const Options& opt) {
    BinaryMatrix a = read_matrix_file(opt.input);
    BinaryMatrix b = repair_matrix(a, *opt.t, parse_verify(opt.verify));
    const std::string out_path = opt.out.empty() ? opt.input + ".repaired" : opt.out;
    write_text_file(out_path, serialize_matrix(b));
    std::cerr << "repaired matrix written to " << out_path << "\n";
    const long long tq = static_cast<long long>(*opt.t) * *opt.t * *opt.t * *opt.t;
    const long long diff = matrix_local_difference(a, b);
    emit(matrix_report_json(*opt.t, diff, 644 * tq, is_inclusive(b)), opt.report);
    return is_inclusive(b) && diff <= 644 * tq ? 0 : kExitVerificationFailure;
}

int cmd_gen(const Options& opt) {
    std::string payload;
    if (opt.kind == "threshold") {
        payload = serialize_graph(gen_threshold(opt.n, opt.seed));
    } else if (opt.kind == "perturbed") {
        Graph g = read_graph_file(opt.input);
        payload = serialize_graph(gen_perturbed(g, opt.d, opt.seed));
    } else if (opt.kind == "trestricted") {
        payload = serialize_matrix(gen_t_restricted(opt.m, opt.n, opt.d, opt.seed));
    } else if (opt.kind == "stair") {
        payload = serialize_matrix(gen_stair(opt.n, opt.tweaked));
    } else {
        throw input_error("unknown generator kind '" + opt.kind + "'");
    }
    if (opt.out.empty()) std::cout << payload;
    else {
        write_text_file(opt.out, payload);
        std::cerr << "generated " << opt.kind << " written to " << opt.out << "\n";
    }
    return 0;
}

int cmd_counterexample(const Options& opt) {
    TreeCounterexample gk = build_counterexample(opt.k);
    bool degree_ok = true;
    for (int leaf = 0; leaf < gk.leaf_count && degree_ok; ++leaf) {
        long long deg = gk.graph.b_degree(leaf);
        long long lo = static_cast<long long>(gk.w_block_size) * leaf;
        degree_ok = deg >= lo && deg <= lo + (1LL << (gk.depth + 1)) - 1;
    }
    std::optional<int> distance;
    if (opt.oracle) distance = oracle_min_halfgraph_distance(gk.graph);
    if (!opt.out.empty()) {
        write_text_file(opt.out, serialize_bipartite(gk.graph));
        std::cerr << "construction written to " << opt.out << "\n";
    }
    emit(counterexample_json(gk, degree_ok, distance ? &*distance : nullptr), opt.report);
    const bool verified = min_nestedness(gk.graph) == 1 && degree_ok;
    return verified ? 0 : kExitVerificationFailure;
}

int cmd_bounds(const std::string& h1_path, const std::string& h2_path, const Options& opt) {
    Graph h1 = read_graph_file(h1_path);
    Graph h2 = read_graph_file(h2_path);
    Graph g = read_graph_file(opt.input);
    auto report = check_thresholds2(h1, h2, g);
    emit(bound_report_json(report), opt.report);
    return 0;
}

int cmd_oracle(const Options& opt) {
    long long value = 0;
    if (opt.kind == "threshold-distance") {
        value = oracle_min_threshold_distance(read_graph_file(opt.input));
    } else if (opt.kind == "monotone-distance") {
        value = oracle_min_monotone_distance(read_matrix_file(opt.input));
    } else if (opt.kind == "halfgraph-distance") {
        value = oracle_min_halfgraph_distance(read_bipartite_file(opt.input));
    } else {
        throw input_error("unknown oracle kind '" + opt.kind + "'");
    }
    emit(oracle_json(opt.kind, value), opt.report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold-graph repair and t-domination toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string h1_path, h2_path;

    auto* analyze = app.add_subcommand("analyze", "domination and recognizer report for a graph");
    analyze->add_option("input", opt.input, "graph file")->required();
    analyze->add_option("--report", opt.report, "also write the JSON to this path");

    auto* repair = app.add_subcommand("repair", "repair a t-dominating graph to a threshold graph");
    repair->add_option("input", opt.input, "graph file")->required();
    repair->add_option("--t", opt.t, "domination parameter (default: computed exactly)");
    repair->add_option("--out", opt.out, "output graph path (default: <input>.repaired)");
    repair->add_option("--report", opt.report, "also write the JSON report to this path");
    repair->add_option("--verify", opt.verify, "off|post|full (default post)");

    auto* matrix = app.add_subcommand("matrix", "repair a t-restricted matrix to an inclusive one");
    matrix->add_option("input", opt.input, "matrix file")->required();
    matrix->add_option("--t", opt.t, "restriction parameter")->required();
    matrix->add_option("--out", opt.out, "output matrix path (default: <input>.repaired)");
    matrix->add_option("--report", opt.report, "also write the JSON report to this path");
    matrix->add_option("--verify", opt.verify, "off|post|full (default post)");

    auto* gen = app.add_subcommand("gen", "seeded generators (threshold, perturbed, trestricted, stair)");
    gen->add_option("kind", opt.kind, "threshold|perturbed|trestricted|stair")->required();
    gen->add_option("--n", opt.n, "vertex count / column count");
    gen->add_option("--m", opt.m, "row count (trestricted)");
    gen->add_option("--d", opt.d, "perturbation budget");
    gen->add_option("--seed", opt.seed, "generator seed");
    gen->add_option("--input", opt.input, "input graph (perturbed)");
    gen->add_option("--out", opt.out, "output path (default: stdout)");
    gen->add_flag("--tweaked", opt.tweaked, "stair: nondecreasing row/column sums variant");

    auto* counter = app.add_subcommand("counterexample", "binary-tree nested-bipartite construction");
    counter->add_option("--k", opt.k, "tree depth (1..6)")->required();
    counter->add_flag("--oracle", opt.oracle, "also compute the exact half-graph distance");
    counter->add_option("--out", opt.out, "write the bipartite graph to this path");
    counter->add_option("--report", opt.report, "also write the JSON to this path");

    auto* bounds = app.add_subcommand("bounds", "two-pattern size bound report");
    bounds->add_option("--h1", h1_path, "first threshold pattern")->required();
    bounds->add_option("--h2", h2_path, "second threshold pattern")->required();
    bounds->add_option("--g", opt.input, "graph to bound")->required();
    bounds->add_option("--report", opt.report, "also write the JSON to this path");

    auto* oracle = app.add_subcommand("oracle", "exact brute-force optima");
    oracle->add_option("kind", opt.kind, "threshold-distance|monotone-distance|halfgraph-distance")
        ->required();
    oracle->add_option("input", opt.input, "input file")->required();
    oracle->add_option("--report", opt.report, "also write the JSON to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (repair->parsed()) return cmd_repair(opt);
        if (matrix->parsed()) return cmd_matrix(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (counter->parsed()) return cmd_counterexample(opt);
        if (bounds->parsed()) return cmd_bounds(h1_path, h2_path, opt);
        if (oracle->parsed()) return cmd_oracle(opt);
    } catch (const invariant_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const resource_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
