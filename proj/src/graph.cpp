#include "tdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "tdom/errors.hpp"

namespace tdom {

namespace {

inline std::size_t word_index(int v) { return static_cast<std::size_t>(v) >> 6; }
inline std::uint64_t bit_of(int v) { return 1ULL << (v & 63); }

int popcount_words(std::span<const std::uint64_t> w) {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw input_error("vertex index out of range");
    if (u == v) throw input_error("self-loops are not allowed");
}

bool Graph::adjacent(int u, int v) const {
    check_pair(u, v);
    return (bits_[static_cast<std::size_t>(u) * words_ + word_index(v)] & bit_of(v)) != 0;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + word_index(v)] |= bit_of(v);
    bits_[static_cast<std::size_t>(v) * words_ + word_index(u)] |= bit_of(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + word_index(v)] &= ~bit_of(v);
    bits_[static_cast<std::size_t>(v) * words_ + word_index(u)] &= ~bit_of(u);
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + word_index(v)] ^= bit_of(v);
    bits_[static_cast<std::size_t>(v) * words_ + word_index(u)] ^= bit_of(u);
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex index out of range");
    return popcount_words(row(v));
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t x = r[w];
        while (x) {
            out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    if (n == 1 || n == 2) {
        if (n == 2) g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

int local_difference(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw input_error("local_difference: graphs must share a vertex set");
    int worst = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto a = g.row(v);
        auto b = h.row(v);
        int d = 0;
        for (std::size_t w = 0; w < a.size(); ++w) d += std::popcount(a[w] ^ b[w]);
        worst = std::max(worst, d);
    }
    return worst;
}

namespace {

// |N(v) \ N(u) \ {u,v}|; v never lies in N(v), so only u needs excluding.
int witness_count(const Graph& g, int u, int v) {
    auto nv = g.row(v);
    auto nu = g.row(u);
    int c = 0;
    for (std::size_t w = 0; w < nv.size(); ++w) c += std::popcount(nv[w] & ~nu[w]);
    if (g.adjacent(u, v)) --c;  // u itself was counted
    return c;
}

}  // namespace

DominationResult dominates(const Graph& g, int u, int v, int t) {
    if (u == v) throw input_error("dominates: vertices must be distinct");
    if (t < 0) throw input_error("dominates: t must be nonnegative");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw input_error("dominates: vertex index out of range");
    DominationResult res;
    res.certificate.u = u;
    res.certificate.v = v;
    for (int w : g.neighbors(v))
        if (w != u && w != v && !g.adjacent(u, w)) res.certificate.witnesses.push_back(w);
    res.dominates = static_cast<int>(res.certificate.witnesses.size()) <= t;
    return res;
}

bool is_t_dominating(const Graph& g, int t) {
    if (t < 0) throw input_error("is_t_dominating: t must be nonnegative");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (witness_count(g, u, v) > t && witness_count(g, v, u) > t) return false;
    return true;
}

int min_domination(const Graph& g) {
    int worst = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            worst = std::max(worst, std::min(witness_count(g, u, v), witness_count(g, v, u)));
    return worst;
}

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
    const int k = pattern.vertex_count();
    if (k > 8) throw input_error("find_induced: pattern limited to 8 vertices");
    if (k > g.vertex_count()) return std::nullopt;
    if (k == 0) return std::vector<int>{};
    const int n = g.vertex_count();
    const std::size_t words = g.words_per_row();

    // Constraining search order: a max-degree pattern vertex first, then
    // repeatedly the vertex with the most placed neighbours (ties: higher
    // degree, then lower index).
    std::vector<int> order;
    std::vector<bool> taken(static_cast<std::size_t>(k), false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int p = 0; p < k; ++p) {
            if (taken[static_cast<std::size_t>(p)]) continue;
            int links = 0;
            for (int q : order) links += pattern.adjacent(p, q);
            if (links > best_links || (links == best_links && pattern.degree(p) > best_deg)) {
                best = p;
                best_links = links;
                best_deg = pattern.degree(p);
            }
        }
        taken[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }

    // Per-level base candidates: vertices with enough degree, tail bits off.
    std::vector<std::vector<std::uint64_t>> degree_ok(
        static_cast<std::size_t>(k), std::vector<std::uint64_t>(words, 0));
    for (int level = 0; level < k; ++level) {
        int need = pattern.degree(order[static_cast<std::size_t>(level)]);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= need)
                degree_ok[static_cast<std::size_t>(level)][static_cast<std::size_t>(v) >> 6] |=
                    1ULL << (v & 63);
    }

    // Forward-checked backtracking: one candidate domain per pattern level,
    // narrowed whenever an earlier level is placed; an emptied domain prunes
    // the whole branch before deeper levels enumerate anything.
    const std::size_t stride = static_cast<std::size_t>(k) * words;
    std::vector<std::uint64_t> domains(static_cast<std::size_t>(k + 1) * stride, 0);
    auto domain = [&](int depth, int level) {
        return domains.data() + static_cast<std::size_t>(depth) * stride +
               static_cast<std::size_t>(level) * words;
    };
    for (int level = 0; level < k; ++level)
        for (std::size_t w = 0; w < words; ++w)
            domain(0, level)[w] = degree_ok[static_cast<std::size_t>(level)][w];
    std::vector<int> chosen(static_cast<std::size_t>(k), -1);

    std::function<bool(int)> descend = [&](int depth) -> bool {
        if (depth == k) return true;
        const int p = order[static_cast<std::size_t>(depth)];
        std::uint64_t* mine = domain(depth, depth);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = mine[w];
            while (bits) {
                const int v = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                chosen[static_cast<std::size_t>(depth)] = v;
                auto row = g.row(v);
                bool viable = true;
                for (int later = depth + 1; later < k && viable; ++later) {
                    const std::uint64_t* src = domain(depth, later);
                    std::uint64_t* dst = domain(depth + 1, later);
                    if (pattern.adjacent(order[static_cast<std::size_t>(later)], p))
                        for (std::size_t x = 0; x < words; ++x) dst[x] = src[x] & row[x];
                    else
                        for (std::size_t x = 0; x < words; ++x) dst[x] = src[x] & ~row[x];
                    dst[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
                    std::uint64_t nonempty = 0;
                    for (std::size_t x = 0; x < words; ++x) nonempty |= dst[x];
                    viable = nonempty != 0;
                }
                if (viable && descend(depth + 1)) return true;
            }
        }
        return false;
    };

    if (!descend(0)) return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    for (int level = 0; level < k; ++level)
        image[static_cast<std::size_t>(order[static_cast<std::size_t>(level)])] =
            chosen[static_cast<std::size_t>(level)];
    return image;
}

bool has_induced(const Graph& g, const Graph& pattern) {
    return find_induced(g, pattern).has_value();
}

std::optional<std::vector<ThresholdStep>> threshold_sequence(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> residual(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) residual[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<ThresholdStep> peeled;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        bool universal = false;
        for (int v = 0; v < n && pick < 0; ++v)
            if (alive[static_cast<std::size_t>(v)] && residual[static_cast<std::size_t>(v)] == 0) pick = v;
        if (pick < 0) {
            for (int v = 0; v < n && pick < 0; ++v)
                if (alive[static_cast<std::size_t>(v)] && residual[static_cast<std::size_t>(v)] == remaining - 1) {
                    pick = v;
                    universal = true;
                }
        }
        if (pick < 0) return std::nullopt;
        alive[static_cast<std::size_t>(pick)] = false;
        --remaining;
        for (int w : g.neighbors(pick))
            if (alive[static_cast<std::size_t>(w)]) --residual[static_cast<std::size_t>(w)];
        peeled.push_back({pick, universal});
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

bool is_threshold(const Graph& g) { return threshold_sequence(g).has_value(); }

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Splittance criterion on the nonincreasing degree sequence; the top-h
    // vertices then form the clique side.
    long long h = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[static_cast<std::size_t>(i)]) >= i) h = i + 1;
    long long head = 0, tail = 0;
    for (long long i = 0; i < n; ++i) {
        int d = g.degree(order[static_cast<std::size_t>(i)]);
        if (i < h) head += d; else tail += d;
    }
    if (head != h * (h - 1) + tail) return std::nullopt;

    SplitPartition part;
    part.clique.assign(order.begin(), order.begin() + h);
    part.stable.assign(order.begin() + h, order.end());
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.stable.begin(), part.stable.end());

    for (std::size_t i = 0; i < part.clique.size(); ++i)
        for (std::size_t j = i + 1; j < part.clique.size(); ++j)
            if (!g.adjacent(part.clique[i], part.clique[j]))
                throw invariant_error("split_partition: clique side failed validation");
    for (std::size_t i = 0; i < part.stable.size(); ++i)
        for (std::size_t j = i + 1; j < part.stable.size(); ++j)
            if (g.adjacent(part.stable[i], part.stable[j]))
                throw invariant_error("split_partition: stable side failed validation");
    return part;
}

bool is_split(const Graph& g) { return split_partition(g).has_value(); }

bool is_split_half_graph(const Graph& g) {
    auto part = split_partition(g);
    if (!part) return false;
    // Cross neighbourhoods of the stable side must form a chain.
    const auto& stable = part->stable;
    std::vector<std::vector<std::uint64_t>> cross;
    cross.reserve(stable.size());
    const std::size_t mwords = (part->clique.size() + 63) / 64;
    for (int v : stable) {
        std::vector<std::uint64_t> mask(mwords, 0);
        for (std::size_t i = 0; i < part->clique.size(); ++i)
            if (g.adjacent(v, part->clique[i])) mask[i >> 6] |= 1ULL << (i & 63);
        cross.push_back(std::move(mask));
    }
    for (std::size_t a = 0; a < cross.size(); ++a)
        for (std::size_t b = a + 1; b < cross.size(); ++b) {
            bool a_in_b = true, b_in_a = true;
            for (std::size_t w = 0; w < mwords; ++w) {
                if (cross[a][w] & ~cross[b][w]) a_in_b = false;
                if (cross[b][w] & ~cross[a][w]) b_in_a = false;
            }
            if (!a_in_b && !b_in_a) return false;
        }
    return true;
}

Graph pattern_c4() { return Graph::cycle(4); }

Graph pattern_2k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

Graph pattern_p4() { return Graph::path(4); }

Graph pattern_c5() { return Graph::cycle(5); }

}  // namespace tdom
