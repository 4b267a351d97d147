#include "tdom/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tdom/errors.hpp"

namespace tdom {

namespace {

using ordered_json = nlohmann::ordered_json;

// Splits a line into whitespace-separated fields and parses them as
// nonnegative integers; anything else is a parse error.
std::vector<long long> parse_fields(const std::string& line, std::size_t expected, int line_no) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("expected a nonnegative integer, got '" + tok + "'", line_no);
        }
    }
    if (out.size() != expected)
        throw parse_error("expected " + std::to_string(expected) + " fields, got " +
                              std::to_string(out.size()),
                          line_no);
    return out;
}

std::string next_line(std::istream& in, int& line_no, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(std::string("missing ") + what, line_no + 1);
    ++line_no;
    return line;
}

void expect_no_trailing(std::istream& in, int line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                throw parse_error("unexpected trailing content", line_no);
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    int line_no = 0;
    auto header = parse_fields(next_line(in, line_no, "header line \"n m\""), 2, 1);
    long long n = header[0], m = header[1];
    if (n > 20'000) throw parse_error("vertex count too large", 1);
    if (m > n * (n - 1) / 2) throw parse_error("edge count exceeds n(n-1)/2", 1);
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        auto f = parse_fields(next_line(in, line_no, "edge line"), 2, line_no + 1);
        long long u = f[0], v = f[1];
        if (!(u < v && v < n)) throw parse_error("edge must satisfy 0 <= u < v < n", line_no);
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error("duplicate edge", line_no);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    expect_no_trailing(in, line_no);
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

BinaryMatrix parse_matrix(std::istream& in) {
    int line_no = 0;
    auto header = parse_fields(next_line(in, line_no, "header line \"m n\""), 2, 1);
    long long m = header[0], n = header[1];
    if (m > 100'000 || n > 100'000 || m * n > 100'000'000)
        throw parse_error("matrix too large", 1);
    BinaryMatrix a(static_cast<int>(m), static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        std::string row = next_line(in, line_no, "matrix row");
        while (!row.empty() && (row.back() == '\r' || row.back() == ' ')) row.pop_back();
        if (static_cast<long long>(row.size()) != n)
            throw parse_error("row must have exactly " + std::to_string(n) + " characters", line_no);
        for (long long j = 0; j < n; ++j) {
            char c = row[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw parse_error("entries must be 0 or 1", line_no);
            if (c == '1') a.set(static_cast<int>(i), static_cast<int>(j), true);
        }
    }
    expect_no_trailing(in, line_no);
    return a;
}

std::string serialize_matrix(const BinaryMatrix& a) {
    std::ostringstream out;
    out << a.row_count() << ' ' << a.col_count() << '\n';
    for (int i = 0; i < a.row_count(); ++i) {
        for (int j = 0; j < a.col_count(); ++j) out << (a.get(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

BipartiteGraph parse_bipartite(std::istream& in) {
    int line_no = 0;
    auto header = parse_fields(next_line(in, line_no, "header line \"na nb m\""), 3, 1);
    long long na = header[0], nb = header[1], m = header[2];
    if (na > 1'000'000 || nb > 1'000'000 || na * nb > 100'000'000)
        throw parse_error("bipartite graph too large", 1);
    if (m > na * nb) throw parse_error("edge count exceeds na*nb", 1);
    BipartiteGraph g(static_cast<int>(na), static_cast<int>(nb));
    for (long long e = 0; e < m; ++e) {
        auto f = parse_fields(next_line(in, line_no, "edge line"), 2, line_no + 1);
        long long a = f[0], b = f[1];
        if (a >= na || b >= nb) throw parse_error("edge endpoint out of range", line_no);
        if (g.adjacent(static_cast<int>(a), static_cast<int>(b)))
            throw parse_error("duplicate edge", line_no);
        g.set_edge(static_cast<int>(a), static_cast<int>(b), true);
    }
    expect_no_trailing(in, line_no);
    return g;
}

std::string serialize_bipartite(const BipartiteGraph& g) {
    std::ostringstream out;
    out << g.a_count() << ' ' << g.b_count() << ' ' << g.edge_count() << '\n';
    for (int a = 0; a < g.a_count(); ++a)
        for (int b = 0; b < g.b_count(); ++b)
            if (g.adjacent(a, b)) out << a << ' ' << b << '\n';
    return out.str();
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

BinaryMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

BipartiteGraph parse_bipartite_text(const std::string& text) {
    std::istringstream in(text);
    return parse_bipartite(in);
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

BinaryMatrix read_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return parse_matrix(in);
}

BipartiteGraph read_bipartite_file(const std::string& path) {
    auto in = open_input(path);
    return parse_bipartite(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

namespace {

ordered_json witness_or_null(const Graph& g, const Graph& pattern, bool provably_absent) {
    if (provably_absent) return nullptr;
    auto w = find_induced(g, pattern);
    if (!w) return nullptr;
    return *w;
}

}  // namespace

std::string analyze_json(const Graph& g) {
    ordered_json doc;
    const bool threshold = is_threshold(g);
    const bool split = is_split(g);
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["min_domination"] = min_domination(g);
    doc["is_threshold"] = threshold;
    doc["is_split"] = split;
    // Split graphs have no induced C4, 2K2 or C5; threshold graphs none of
    // C4, 2K2, P4 either. Skipping those searches saves the absence proofs
    // on large inputs.
    doc["forbidden_witnesses"] = {
        {"C4", witness_or_null(g, pattern_c4(), split)},
        {"2K2", witness_or_null(g, pattern_2k2(), split)},
        {"P4", witness_or_null(g, pattern_p4(), threshold)},
        {"C5", witness_or_null(g, pattern_c5(), split)},
    };
    return doc.dump(2);
}

std::string repair_report_json(const RepairReport& report) {
    ordered_json doc;
    doc["t"] = report.t;
    doc["stage_diffs"] = {
        {"to_split", report.diff_to_split},
        {"to_halfgraph", report.diff_to_halfgraph},
        {"total", report.diff_total},
    };
    doc["bounds"] = {
        {"split", report.bound_split},
        {"matrix", report.bound_matrix},
        {"total", report.bound_total},
    };
    doc["verified"] = {
        {"output_threshold", report.output_threshold},
        {"bounds_hold", report.bounds_hold},
    };
    doc["orders"] = {
        {"rows", report.row_order},
        {"cols", report.col_order},
    };
    return doc.dump(2);
}

std::string matrix_report_json(int t, long long diff, long long bound, bool inclusive) {
    ordered_json doc;
    doc["t"] = t;
    doc["diff"] = diff;
    doc["bound"] = bound;
    doc["verified"] = {
        {"inclusive", inclusive},
        {"bound_holds", diff <= bound},
    };
    return doc.dump(2);
}

std::string bound_report_json(const BoundReport& report) {
    ordered_json doc;
    doc["m"] = report.m;
    doc["k"] = report.k;
    doc["rho"] = report.rho_value;
    // Exact integer when it fits a JSON number, decimal string otherwise.
    bool numeric = report.bound.size() <= 18 &&
                   report.bound.find('/') == std::string::npos;
    if (numeric) doc["bound"] = std::stoll(report.bound);
    else doc["bound"] = report.bound;
    doc["premises"] = {
        {"h1_threshold", report.premises.h1_threshold},
        {"h2_threshold", report.premises.h2_threshold},
        {"g_avoids_h1", report.premises.g_avoids_h1},
        {"g_avoids_h2", report.premises.g_avoids_h2},
    };
    if (report.premises.all()) doc["holds"] = report.holds;
    else doc["holds"] = nullptr;
    return doc.dump(2);
}

std::string counterexample_json(const TreeCounterexample& gk, bool degree_bounds_ok,
                                const int* oracle_distance) {
    ordered_json doc;
    doc["k"] = gk.depth;
    doc["sizes"] = {
        {"a", gk.graph.a_count()},
        {"b", gk.graph.b_count()},
        {"internal", gk.internal_count},
        {"w_block", gk.w_block_size},
    };
    doc["nested_t"] = min_nestedness(gk.graph);
    doc["degree_bounds_ok"] = degree_bounds_ok;
    if (oracle_distance) doc["oracle_distance"] = *oracle_distance;
    return doc.dump(2);
}

std::string oracle_json(const std::string& kind, long long value) {
    ordered_json doc;
    doc["kind"] = kind;
    doc["value"] = value;
    return doc.dump(2);
}

}  // namespace tdom
