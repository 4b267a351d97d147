#ifndef TDOM_PIPELINE_HPP
#define TDOM_PIPELINE_HPP

#include <optional>
#include <vector>

#include "tdom/graph.hpp"
#include "tdom/matrix.hpp"

namespace tdom {

struct SplitReduction {
    Graph graph;
    SplitPartition partition;
};

struct SplitMatrix {
    BinaryMatrix matrix;
    std::vector<int> row_vertices;  // clique side, nondecreasing degree
    std::vector<int> col_vertices;  // stable side, nondecreasing degree
};

// Everything a repair run produced, with independently recomputed
// differences and the certified bounds they are checked against.
struct RepairReport {
    int t = 0;
    long long diff_to_split = 0;
    long long diff_to_halfgraph = 0;
    long long diff_total = 0;
    long long bound_split = 0;      // 2t
    long long bound_matrix = 0;     // 644 t^4
    long long bound_total = 0;      // 646 t^4
    bool output_threshold = false;
    bool bounds_hold = false;
    SplitPartition partition;       // of the reduced graph
    std::vector<int> row_order;     // vertex ids backing matrix rows
    std::vector<int> col_order;     // vertex ids backing matrix columns
    BinaryMatrix matrix_before;
    BinaryMatrix matrix_after;
};

struct GraphRepair {
    Graph graph;
    RepairReport report;
};

// Degree-ordered reduction of a t-dominating graph to a t-dominating split
// graph within local difference 2t. Threshold inputs are returned as-is
// with a valid split partition.
SplitReduction reduce_to_split(const Graph& g, int t, Verify verify = Verify::post);

// Clique-by-stable adjacency matrix with both sides sorted by nondecreasing
// degree (ties by index). For a t-dominating graph the result is
// t-restricted.
SplitMatrix split_to_matrix(const Graph& g, const SplitPartition& partition);

// Split graph read back from an inclusive matrix: rows become a clique,
// columns a stable set, cross edges follow the entries. The result is a
// split half-graph.
Graph matrix_to_graph(const BinaryMatrix& b, const std::vector<int>& row_vertices,
                      const std::vector<int>& col_vertices, Verify verify = Verify::post);

// End-to-end repair to a threshold graph within local difference
// 644 t^4 + 2t <= 646 t^4. When t is omitted it is taken as
// min_domination(g).
GraphRepair repair_graph(const Graph& g, std::optional<int> t = std::nullopt,
                         Verify verify = Verify::post);

}  // namespace tdom

#endif
