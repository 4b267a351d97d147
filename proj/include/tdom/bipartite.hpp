#ifndef TDOM_BIPARTITE_HPP
#define TDOM_BIPARTITE_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace tdom {

// Bipartite graph on sides A and B; adjacency held as one bitset over A per
// B vertex, which is the direction every nestedness notion here reads.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int a_count, int b_count);

    int a_count() const { return na_; }
    int b_count() const { return nb_; }

    bool adjacent(int a, int b) const;
    void set_edge(int a, int b, bool value);
    void toggle_edge(int a, int b);

    std::span<const std::uint64_t> b_row(int b) const;
    int b_degree(int b) const;
    long long edge_count() const;

    bool operator==(const BipartiteGraph& other) const = default;

private:
    void check_pair(int a, int b) const;

    int na_ = 0;
    int nb_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// The depth-k binary-tree construction: B holds the 2^k leaves in leaf-value
// order, A holds the 2^k - 1 internal nodes followed by one padding block of
// 2^(k+1) + 2k vertices per leaf.
struct TreeCounterexample {
    int depth = 0;
    int internal_count = 0;
    int leaf_count = 0;
    int w_block_size = 0;
    BipartiteGraph graph;

    // Internal node with `prefix_len` bits of value `value`, heap-ordered.
    int internal_index(int prefix_len, int value) const { return (1 << prefix_len) - 1 + value; }
    int w_index(int leaf, int offset) const {
        return internal_count + leaf * w_block_size + offset;
    }
};

// Builds the construction for 1 <= k <= 6. A leaf is adjacent to the whole
// padding block of every smaller leaf; it is adjacent to an internal node
// when it sits in that node's low subtree, or entirely to its right.
TreeCounterexample build_counterexample(int k);

// Every pair in B has a side with at most t private neighbours. 0-nested
// graphs are exactly the half-graphs.
bool is_t_nested(const BipartiteGraph& g, int t);

// Smallest t for which the graph is t-nested.
int min_nestedness(const BipartiteGraph& g);

// Max over B vertices only of the neighbourhood symmetric difference.
int bipartite_local_difference(const BipartiteGraph& g, const BipartiteGraph& h);

struct AdversaryWitness {
    int leaf = 0;                // index in B of the walk's final leaf
    int disagreements = 0;       // steps where the two graphs disagree on (t_i, leaf)
    std::vector<int> walk;       // A indices of t_0 .. t_{k-1}
};

// The walk's step dichotomy failed: in H, `internal_vertex` is adjacent to
// low-subtree leaf `low_leaf` yet not to high-subtree leaf `high_leaf`, so
// H's neighbourhood chain cannot respect leaf order.
struct OrderViolation {
    int internal_vertex = 0;
    int low_leaf = 0;
    int high_leaf = 0;
};

using AdversaryResult = std::variant<AdversaryWitness, OrderViolation>;

// Walks t_0, t_1, ..., t_k down the tree against a 0-nested H on the same
// sides, descending low when t_i has no H-neighbour among the low leaves,
// high when it has all high leaves. A completed walk disagrees with H on
// every pair (t_i, t_k), so any H within bipartite local difference k-1 of
// the construction is contradicted.
AdversaryResult adversary_witness(const TreeCounterexample& gk, const BipartiteGraph& h);

// Exact minimum bipartite local difference to any half-graph on the same
// sides (|B| <= 5, optimum at most 4). Feasibility of a candidate bound is
// decided per B-order by dynamic programming over capped column counts.
int oracle_min_halfgraph_distance(const BipartiteGraph& g);

struct HalfgraphRepair {
    int distance = 0;
    BipartiteGraph graph;
};

// Same search, also materialising one optimal half-graph.
HalfgraphRepair min_halfgraph_repair(const BipartiteGraph& g);

}  // namespace tdom

#endif
