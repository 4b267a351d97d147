#ifndef TDOM_GRAPH_HPP
#define TDOM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tdom {

// Undirected simple graph on vertices 0..n-1, adjacency stored as one
// bitset row per vertex. Rows stay symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    long long edge_count() const;

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    int degree(int v) const;
    std::span<const std::uint64_t> row(int v) const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& other) const = default;

    static Graph edgeless(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    Graph complement() const;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Witnesses that v is NOT 0-dominated by u: vertices adjacent to v,
// nonadjacent to u, excluding u and v themselves.
struct DominationCertificate {
    int u = -1;
    int v = -1;
    std::vector<int> witnesses;
};

struct DominationResult {
    bool dominates = false;
    DominationCertificate certificate;
};

struct SplitPartition {
    std::vector<int> clique;  // sorted ascending
    std::vector<int> stable;  // sorted ascending
};

// One step of a threshold construction: the vertex added and whether it
// was joined to everything present at that point.
struct ThresholdStep {
    int vertex = -1;
    bool universal = false;
};

// Max over vertices of |N_G(v) symdiff N_H(v)|. Throws input_error if the
// vertex counts differ.
int local_difference(const Graph& g, const Graph& h);

// Does u t-dominate v, i.e. are there at most t vertices outside {u,v}
// adjacent to v and not to u? Certificate always lists the full witness set.
DominationResult dominates(const Graph& g, int u, int v, int t);

bool is_t_dominating(const Graph& g, int t);

// Smallest t for which the graph is t-dominating: the max over vertex pairs
// of the smaller of the two one-sided witness counts.
int min_domination(const Graph& g);

// First induced copy of `pattern` found by degree-pruned backtracking;
// result[p] is the image of pattern vertex p. Patterns are capped at
// 8 vertices.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);
bool has_induced(const Graph& g, const Graph& pattern);

// Peels an isolated-or-universal vertex until the graph is empty (isolated
// vertices preferred, lowest index first). Success yields the reversed peel
// order, which is a valid construction sequence.
std::optional<std::vector<ThresholdStep>> threshold_sequence(const Graph& g);
bool is_threshold(const Graph& g);

// Canonical split partition via the degree-sequence splittance criterion,
// validated before returning; nullopt when the graph is not split.
std::optional<SplitPartition> split_partition(const Graph& g);
bool is_split(const Graph& g);

// Split graph whose clique/stable cross edges form a half-graph, i.e. the
// stable-side neighbourhoods are a chain under inclusion.
bool is_split_half_graph(const Graph& g);

// Fixed small patterns used throughout.
Graph pattern_c4();
Graph pattern_2k2();
Graph pattern_p4();
Graph pattern_c5();

}  // namespace tdom

#endif
