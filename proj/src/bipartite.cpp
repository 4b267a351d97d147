#include "tdom/bipartite.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "tdom/errors.hpp"

namespace tdom {

BipartiteGraph::BipartiteGraph(int a_count, int b_count)
    : na_(a_count), nb_(b_count), words_((static_cast<std::size_t>(a_count) + 63) / 64) {
    if (a_count < 0 || b_count < 0) throw input_error("bipartite sides must be nonnegative");
    bits_.assign(static_cast<std::size_t>(nb_) * words_, 0);
}

void BipartiteGraph::check_pair(int a, int b) const {
    if (a < 0 || a >= na_ || b < 0 || b >= nb_)
        throw input_error("bipartite vertex index out of range");
}

bool BipartiteGraph::adjacent(int a, int b) const {
    check_pair(a, b);
    return (bits_[static_cast<std::size_t>(b) * words_ + (static_cast<std::size_t>(a) >> 6)] >> (a & 63)) & 1ULL;
}

void BipartiteGraph::set_edge(int a, int b, bool value) {
    check_pair(a, b);
    std::uint64_t& w = bits_[static_cast<std::size_t>(b) * words_ + (static_cast<std::size_t>(a) >> 6)];
    if (value) w |= 1ULL << (a & 63); else w &= ~(1ULL << (a & 63));
}

void BipartiteGraph::toggle_edge(int a, int b) {
    check_pair(a, b);
    bits_[static_cast<std::size_t>(b) * words_ + (static_cast<std::size_t>(a) >> 6)] ^= 1ULL << (a & 63);
}

std::span<const std::uint64_t> BipartiteGraph::b_row(int b) const {
    return {bits_.data() + static_cast<std::size_t>(b) * words_, words_};
}

int BipartiteGraph::b_degree(int b) const {
    int c = 0;
    for (std::uint64_t w : b_row(b)) c += std::popcount(w);
    return c;
}

long long BipartiteGraph::edge_count() const {
    long long c = 0;
    for (int b = 0; b < nb_; ++b) c += b_degree(b);
    return c;
}

TreeCounterexample build_counterexample(int k) {
    if (k < 1) throw input_error("build_counterexample: k must be positive");
    if (k > 6) throw resource_error("build_counterexample: k is limited to 6");

    TreeCounterexample out;
    out.depth = k;
    out.leaf_count = 1 << k;
    out.internal_count = (1 << k) - 1;
    out.w_block_size = (1 << (k + 1)) + 2 * k;
    out.graph = BipartiteGraph(out.internal_count + out.leaf_count * out.w_block_size,
                               out.leaf_count);

    for (int leaf = 0; leaf < out.leaf_count; ++leaf) {
        // Whole padding block of every smaller leaf.
        for (int smaller = 0; smaller < leaf; ++smaller)
            for (int off = 0; off < out.w_block_size; ++off)
                out.graph.set_edge(out.w_index(smaller, off), leaf, true);

        // Internal nodes: adjacent iff the leaf descends through the node's
        // low child, or the paths diverge with the leaf on the high side.
        for (int len = 0; len < k; ++len)
            for (int value = 0; value < (1 << len); ++value) {
                int prefix_of_leaf = leaf >> (k - len);
                bool adj;
                if (prefix_of_leaf == value) {
                    int next_bit = (leaf >> (k - len - 1)) & 1;
                    adj = next_bit == 0;
                } else {
                    int diff = prefix_of_leaf ^ value;
                    int pos = std::bit_width(static_cast<unsigned>(diff)) - 1;  // highest differing bit
                    adj = ((prefix_of_leaf >> pos) & 1) == 1;
                }
                if (adj) out.graph.set_edge(out.internal_index(len, value), leaf, true);
            }
    }
    return out;
}

namespace {

int private_neighbours(const BipartiteGraph& g, int keep, int drop) {
    auto a = g.b_row(keep);
    auto b = g.b_row(drop);
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & ~b[w]);
    return c;
}

}  // namespace

bool is_t_nested(const BipartiteGraph& g, int t) {
    if (t < 0) throw input_error("is_t_nested: t must be nonnegative");
    for (int u = 0; u < g.b_count(); ++u)
        for (int v = u + 1; v < g.b_count(); ++v)
            if (std::min(private_neighbours(g, u, v), private_neighbours(g, v, u)) > t) return false;
    return true;
}

int min_nestedness(const BipartiteGraph& g) {
    int worst = 0;
    for (int u = 0; u < g.b_count(); ++u)
        for (int v = u + 1; v < g.b_count(); ++v)
            worst = std::max(worst, std::min(private_neighbours(g, u, v), private_neighbours(g, v, u)));
    return worst;
}

int bipartite_local_difference(const BipartiteGraph& g, const BipartiteGraph& h) {
    if (g.a_count() != h.a_count() || g.b_count() != h.b_count())
        throw input_error("bipartite_local_difference: graphs must share the bipartition");
    int worst = 0;
    for (int b = 0; b < g.b_count(); ++b) {
        auto x = g.b_row(b);
        auto y = h.b_row(b);
        int d = 0;
        for (std::size_t w = 0; w < x.size(); ++w) d += std::popcount(x[w] ^ y[w]);
        worst = std::max(worst, d);
    }
    return worst;
}

AdversaryResult adversary_witness(const TreeCounterexample& gk, const BipartiteGraph& h) {
    const BipartiteGraph& g = gk.graph;
    if (g.a_count() != h.a_count() || g.b_count() != h.b_count())
        throw input_error("adversary_witness: graphs must share the bipartition");
    if (!is_t_nested(h, 0)) throw input_error("adversary_witness: h must be 0-nested");

    const int k = gk.depth;
    std::vector<int> walk;
    int value = 0;  // bits of t_i read so far
    for (int i = 0; i < k; ++i) {
        const int node = gk.internal_index(i, value);
        walk.push_back(node);
        const int low_from = value << (k - i);
        const int low_to = low_from + (1 << (k - i - 1));        // exclusive
        const int high_to = low_from + (1 << (k - i));           // exclusive

        bool none_low = true;
        int low_hit = -1;
        for (int leaf = low_from; leaf < low_to; ++leaf)
            if (h.adjacent(node, leaf)) {
                none_low = false;
                low_hit = leaf;
                break;
            }
        if (none_low) {
            value = value << 1;
            continue;
        }
        bool all_high = true;
        int high_miss = -1;
        for (int leaf = low_to; leaf < high_to; ++leaf)
            if (!h.adjacent(node, leaf)) {
                all_high = false;
                high_miss = leaf;
                break;
            }
        if (all_high) {
            value = (value << 1) | 1;
            continue;
        }
        return OrderViolation{node, low_hit, high_miss};
    }

    AdversaryWitness w;
    w.leaf = value;
    w.walk = walk;
    for (int node : walk)
        if (g.adjacent(node, w.leaf) != h.adjacent(node, w.leaf)) ++w.disagreements;
    return w;
}

namespace {

constexpr int kHalfgraphSearchCap = 4;

// Feasibility of max column difference <= d under one B order, by DP over
// per-column mismatch counts capped at d. States are mixed-radix numbers
// with digits in [0, d].
struct OrderDp {
    const BipartiteGraph& g;
    const std::vector<int>& order;
    int nb;
    int d;
    std::vector<std::uint32_t> radix_pow;

    OrderDp(const BipartiteGraph& graph, const std::vector<int>& perm, int bound)
        : g(graph), order(perm), nb(static_cast<int>(perm.size())), d(bound),
          radix_pow(static_cast<std::size_t>(nb) + 1, 1) {
        for (int j = 1; j <= nb; ++j)
            radix_pow[static_cast<std::size_t>(j)] = radix_pow[static_cast<std::size_t>(j) - 1] *
                                                     static_cast<std::uint32_t>(d + 1);
    }

    std::uint32_t state_count() const { return radix_pow[static_cast<std::size_t>(nb)]; }

    // Mismatch counts per position for A vertex `a` choosing suffix start p.
    std::array<int, 5> mismatches(int a, int p) const {
        std::array<int, 5> mis{};
        for (int j = 0; j < nb; ++j)
            mis[static_cast<std::size_t>(j)] = g.adjacent(a, order[static_cast<std::size_t>(j)]) != (j >= p);
        return mis;
    }

    // One DP layer per A vertex; layers[a] holds reachable states before
    // assigning vertex a.
    std::vector<std::vector<bool>> run() const {
        std::vector<std::vector<bool>> layers(static_cast<std::size_t>(g.a_count()) + 1,
                                              std::vector<bool>(state_count(), false));
        layers[0][0] = true;
        for (int a = 0; a < g.a_count(); ++a) {
            for (std::uint32_t s = 0; s < state_count(); ++s) {
                if (!layers[static_cast<std::size_t>(a)][s]) continue;
                for (int p = 0; p <= nb; ++p) {
                    auto mis = mismatches(a, p);
                    std::uint32_t ns = s;
                    bool ok = true;
                    for (int j = 0; j < nb && ok; ++j) {
                        int digit = static_cast<int>(s / radix_pow[static_cast<std::size_t>(j)] %
                                                     static_cast<std::uint32_t>(d + 1));
                        if (digit + mis[static_cast<std::size_t>(j)] > d) ok = false;
                        else ns += static_cast<std::uint32_t>(mis[static_cast<std::size_t>(j)]) *
                                   radix_pow[static_cast<std::size_t>(j)];
                    }
                    if (ok) layers[static_cast<std::size_t>(a) + 1][ns] = true;
                }
            }
        }
        return layers;
    }
};

bool order_feasible(const BipartiteGraph& g, const std::vector<int>& order, int d,
                    std::vector<int>* thresholds_out) {
    OrderDp dp(g, order, d);
    auto layers = dp.run();
    const auto& last = layers[static_cast<std::size_t>(g.a_count())];
    std::uint32_t target = dp.state_count();
    for (std::uint32_t s = 0; s < dp.state_count(); ++s)
        if (last[s]) { target = s; break; }
    if (target == dp.state_count()) return false;
    if (!thresholds_out) return true;

    // Walk layers backwards, recovering one consistent suffix choice per A
    // vertex.
    thresholds_out->assign(static_cast<std::size_t>(g.a_count()), dp.nb);
    std::uint32_t state = target;
    for (int a = g.a_count() - 1; a >= 0; --a) {
        bool found = false;
        for (int p = 0; p <= dp.nb && !found; ++p) {
            auto mis = dp.mismatches(a, p);
            std::uint32_t prev = state;
            bool ok = true;
            for (int j = 0; j < dp.nb && ok; ++j) {
                int digit = static_cast<int>(state / dp.radix_pow[static_cast<std::size_t>(j)] %
                                             static_cast<std::uint32_t>(d + 1));
                if (digit < mis[static_cast<std::size_t>(j)]) ok = false;
                else prev -= static_cast<std::uint32_t>(mis[static_cast<std::size_t>(j)]) *
                             dp.radix_pow[static_cast<std::size_t>(j)];
            }
            if (ok && layers[static_cast<std::size_t>(a)][prev]) {
                (*thresholds_out)[static_cast<std::size_t>(a)] = p;
                state = prev;
                found = true;
            }
        }
        if (!found) throw invariant_error("halfgraph oracle: backtracking lost the DP path");
    }
    return true;
}

bool distance_feasible(const BipartiteGraph& g, int d, std::vector<int>* order_out,
                       std::vector<int>* thresholds_out) {
    std::vector<int> order(static_cast<std::size_t>(g.b_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end());
    do {
        if (order_feasible(g, order, d, thresholds_out)) {
            if (order_out) *order_out = order;
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace

int oracle_min_halfgraph_distance(const BipartiteGraph& g) {
    if (g.b_count() > 5) throw resource_error("halfgraph oracle: |B| is limited to 5");
    int lo = 0, hi = kHalfgraphSearchCap;
    if (!distance_feasible(g, hi, nullptr, nullptr))
        throw resource_error("halfgraph oracle: optimum exceeds the search bound");
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (distance_feasible(g, mid, nullptr, nullptr)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

HalfgraphRepair min_halfgraph_repair(const BipartiteGraph& g) {
    const int d = oracle_min_halfgraph_distance(g);
    std::vector<int> order, thresholds;
    if (!distance_feasible(g, d, &order, &thresholds))
        throw invariant_error("halfgraph oracle: optimum no longer feasible");
    HalfgraphRepair out{d, BipartiteGraph(g.a_count(), g.b_count())};
    for (int a = 0; a < g.a_count(); ++a)
        for (int j = thresholds[static_cast<std::size_t>(a)]; j < g.b_count(); ++j)
            out.graph.set_edge(a, order[static_cast<std::size_t>(j)], true);
    return out;
}

}  // namespace tdom
