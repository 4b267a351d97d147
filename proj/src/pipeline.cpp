#include "tdom/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "tdom/errors.hpp"

namespace tdom {

namespace {

std::vector<int> by_degree_then_index(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> order = vertices;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    return order;
}

void validate_partition(const Graph& g, const SplitPartition& p) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    auto mark = [&](const std::vector<int>& side) {
        for (int v : side) {
            if (v < 0 || v >= g.vertex_count()) throw input_error("split partition: vertex out of range");
            if (seen[static_cast<std::size_t>(v)]) throw input_error("split partition: vertex repeated");
            seen[static_cast<std::size_t>(v)] = true;
        }
    };
    mark(p.clique);
    mark(p.stable);
    if (static_cast<int>(p.clique.size() + p.stable.size()) != g.vertex_count())
        throw input_error("split partition: does not cover the vertex set");
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.adjacent(p.clique[i], p.clique[j]))
                throw input_error("split partition: clique side has a non-edge");
    for (std::size_t i = 0; i < p.stable.size(); ++i)
        for (std::size_t j = i + 1; j < p.stable.size(); ++j)
            if (g.adjacent(p.stable[i], p.stable[j]))
                throw input_error("split partition: stable side has an edge");
}

}  // namespace

SplitReduction reduce_to_split(const Graph& g, int t, Verify verify) {
    if (t < 0) throw input_error("reduce_to_split: t must be nonnegative");
    if (!is_t_dominating(g, t)) throw input_error("reduce_to_split: graph is not t-dominating");
    const int n = g.vertex_count();

    if (is_threshold(g)) {
        auto part = split_partition(g);
        if (!part) throw invariant_error("reduce_to_split: threshold graph has no split partition");
        return {g, *part};
    }

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> order = by_degree_then_index(g, all);

    // Smallest prefix of the degree order in which some vertex already has
    // 2t+1 neighbours inside the prefix.
    std::vector<int> inside(static_cast<std::size_t>(n), 0);
    std::vector<bool> added(static_cast<std::size_t>(n), false);
    int prefix = 0;  // 0 means no prefix qualifies
    for (int k = 0; k < n && prefix == 0; ++k) {
        int v = order[static_cast<std::size_t>(k)];
        added[static_cast<std::size_t>(v)] = true;
        for (int w : g.neighbors(v))
            if (added[static_cast<std::size_t>(w)]) {
                ++inside[static_cast<std::size_t>(w)];
                ++inside[static_cast<std::size_t>(v)];
            }
        for (int h = 0; h <= k && prefix == 0; ++h)
            if (inside[static_cast<std::size_t>(order[static_cast<std::size_t>(h)])] >= 2 * t + 1)
                prefix = k + 1;
    }

    SplitReduction out{Graph(n), {}};
    if (prefix == 0) {
        // Every degree is at most 2t; dropping all edges lands on a split graph.
        out.graph = Graph::edgeless(n);
        out.partition.stable = all;
    } else {
        out.graph = g;
        std::vector<int> stable(order.begin(), order.begin() + prefix - 1);
        std::vector<int> clique(order.begin() + prefix - 1, order.end());
        for (std::size_t i = 0; i < stable.size(); ++i)
            for (std::size_t j = i + 1; j < stable.size(); ++j)
                if (out.graph.adjacent(stable[i], stable[j])) out.graph.remove_edge(stable[i], stable[j]);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!out.graph.adjacent(clique[i], clique[j])) out.graph.add_edge(clique[i], clique[j]);
        std::sort(stable.begin(), stable.end());
        std::sort(clique.begin(), clique.end());
        out.partition.clique = std::move(clique);
        out.partition.stable = std::move(stable);
    }

    if (verify != Verify::off) {
        validate_partition(out.graph, out.partition);
        if (local_difference(g, out.graph) > 2 * t)
            throw invariant_error("reduce_to_split: local difference exceeds 2t");
        if (!is_t_dominating(out.graph, t))
            throw invariant_error("reduce_to_split: output is not t-dominating");
    }
    return out;
}

SplitMatrix split_to_matrix(const Graph& g, const SplitPartition& partition) {
    validate_partition(g, partition);
    SplitMatrix out;
    out.row_vertices = by_degree_then_index(g, partition.clique);
    out.col_vertices = by_degree_then_index(g, partition.stable);
    out.matrix = BinaryMatrix(static_cast<int>(out.row_vertices.size()),
                              static_cast<int>(out.col_vertices.size()));
    for (int i = 0; i < out.matrix.row_count(); ++i)
        for (int j = 0; j < out.matrix.col_count(); ++j)
            if (g.adjacent(out.row_vertices[static_cast<std::size_t>(i)],
                           out.col_vertices[static_cast<std::size_t>(j)]))
                out.matrix.set(i, j, true);
    return out;
}

Graph matrix_to_graph(const BinaryMatrix& b, const std::vector<int>& row_vertices,
                      const std::vector<int>& col_vertices, Verify verify) {
    if (static_cast<int>(row_vertices.size()) != b.row_count() ||
        static_cast<int>(col_vertices.size()) != b.col_count())
        throw input_error("matrix_to_graph: vertex orders do not match the matrix");
    if (!is_inclusive(b)) throw input_error("matrix_to_graph: matrix is not inclusive");

    const int n = b.row_count() + b.col_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    auto mark = [&](const std::vector<int>& side) {
        for (int v : side) {
            if (v < 0 || v >= n) throw input_error("matrix_to_graph: vertex ids must form 0..n-1");
            if (seen[static_cast<std::size_t>(v)]) throw input_error("matrix_to_graph: repeated vertex id");
            seen[static_cast<std::size_t>(v)] = true;
        }
    };
    mark(row_vertices);
    mark(col_vertices);

    Graph h(n);
    for (std::size_t i = 0; i < row_vertices.size(); ++i)
        for (std::size_t j = i + 1; j < row_vertices.size(); ++j)
            h.add_edge(row_vertices[i], row_vertices[j]);
    for (int i = 0; i < b.row_count(); ++i)
        for (int j = 0; j < b.col_count(); ++j)
            if (b.get(i, j))
                h.add_edge(row_vertices[static_cast<std::size_t>(i)],
                           col_vertices[static_cast<std::size_t>(j)]);

    if (verify != Verify::off && !is_split_half_graph(h))
        throw invariant_error("matrix_to_graph: output is not a split half-graph");
    return h;
}

GraphRepair repair_graph(const Graph& g, std::optional<int> t, Verify verify) {
    const int t_eff = t ? *t : min_domination(g);
    if (t && !is_t_dominating(g, *t))
        throw input_error("repair_graph: graph is not t-dominating for the supplied t");

    RepairReport report;
    report.t = t_eff;
    const long long tq = static_cast<long long>(t_eff) * t_eff * t_eff * t_eff;
    report.bound_split = 2LL * t_eff;
    report.bound_matrix = 644 * tq;
    report.bound_total = 646 * tq;

    if (is_threshold(g)) {
        auto part = split_partition(g);
        report.partition = part ? *part : SplitPartition{};
        report.output_threshold = true;
        report.bounds_hold = true;
        return {g, std::move(report)};
    }
    // Non-threshold and t-dominating forces t >= 1.

    SplitReduction reduced = reduce_to_split(g, t_eff, verify);
    SplitMatrix encoded = split_to_matrix(reduced.graph, reduced.partition);
    if (verify == Verify::full && !is_t_restricted(encoded.matrix, t_eff))
        throw invariant_error("repair_graph: encoded matrix is not t-restricted");
    BinaryMatrix repaired = repair_matrix(encoded.matrix, t_eff, verify);
    Graph h = matrix_to_graph(repaired, encoded.row_vertices, encoded.col_vertices, verify);

    report.diff_to_split = local_difference(g, reduced.graph);
    report.diff_to_halfgraph = local_difference(reduced.graph, h);
    report.diff_total = local_difference(g, h);
    report.partition = reduced.partition;
    report.row_order = encoded.row_vertices;
    report.col_order = encoded.col_vertices;
    report.matrix_before = encoded.matrix;
    report.matrix_after = repaired;
    report.output_threshold = is_threshold(h);
    report.bounds_hold = report.diff_to_split <= report.bound_split &&
                         report.diff_to_halfgraph <= report.bound_matrix &&
                         report.diff_total <= report.bound_total;
    return {std::move(h), std::move(report)};
}

}  // namespace tdom
