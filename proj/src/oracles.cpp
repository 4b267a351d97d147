#include "tdom/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <vector>

#include "tdom/errors.hpp"
#include "tdom/rng.hpp"

namespace tdom {

std::uint64_t graph_count(int n) {
    if (n < 0 || n > 7) throw input_error("graph_count: n must be in 0..7");
    return 1ULL << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 7) throw input_error("graph_from_mask: n must be in 0..7");
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit) {
    const std::uint64_t total = graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(n, mask));
}

namespace {

// Adjacency rows packed into bytes; enough for n <= 7.
using SmallRows = std::array<std::uint8_t, 7>;

SmallRows pack_rows(const Graph& g) {
    SmallRows rows{};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) rows[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << v);
    return rows;
}

const std::vector<SmallRows>& threshold_catalog(int n) {
    static std::vector<SmallRows> catalogs[8];
    static std::once_flag flags[8];
    std::call_once(flags[static_cast<std::size_t>(n)], [n] {
        std::vector<SmallRows>& cat = catalogs[static_cast<std::size_t>(n)];
        enumerate_graphs(n, [&](const Graph& g) {
            if (is_threshold(g)) cat.push_back(pack_rows(g));
        });
    });
    return catalogs[static_cast<std::size_t>(n)];
}

}  // namespace

int oracle_min_threshold_distance(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 7) throw input_error("oracle_min_threshold_distance: n must be at most 7");
    SmallRows rows = pack_rows(g);
    int best = n;  // per-vertex difference can never exceed n-1
    for (const SmallRows& cand : threshold_catalog(n)) {
        int worst = 0;
        for (int v = 0; v < n && worst < best; ++v)
            worst = std::max(worst, std::popcount(static_cast<unsigned>(rows[static_cast<std::size_t>(v)] ^
                                                                        cand[static_cast<std::size_t>(v)])));
        best = std::min(best, worst);
        if (best == 0) break;
    }
    return best;
}

int oracle_min_monotone_distance(const BinaryMatrix& a) {
    const int m = a.row_count(), n = a.col_count();
    if (m + n > 24) throw input_error("oracle_min_monotone_distance: m + n must be at most 24");
    if (m == 0 || n == 0) return 0;

    // DFS over nondecreasing suffix lengths s_0 <= ... <= s_{m-1} (row i of
    // the candidate holds ones in its last s_i columns), keeping per-column
    // mismatch counts and pruning at the incumbent.
    int best = std::max(m, n) + 1;
    std::vector<int> coldiff(static_cast<std::size_t>(n), 0);

    auto row_mismatch = [&](int i, int s) {
        int c = 0;
        for (int j = 0; j < n; ++j) c += a.get(i, j) != (j >= n - s);
        return c;
    };

    std::function<void(int, int, int)> descend = [&](int i, int min_suffix, int row_worst) {
        if (row_worst >= best) return;
        if (i == m) {
            int worst = row_worst;
            for (int d : coldiff) worst = std::max(worst, d);
            best = std::min(best, worst);
            return;
        }
        for (int s = min_suffix; s <= n; ++s) {
            int w = std::max(row_worst, row_mismatch(i, s));
            if (w >= best) continue;
            bool fine = true;
            for (int j = 0; j < n; ++j) {
                coldiff[static_cast<std::size_t>(j)] += a.get(i, j) != (j >= n - s);
                if (coldiff[static_cast<std::size_t>(j)] >= best) fine = false;
            }
            if (fine) descend(i + 1, s, w);
            for (int j = 0; j < n; ++j)
                coldiff[static_cast<std::size_t>(j)] -= a.get(i, j) != (j >= n - s);
        }
    };
    descend(0, 0, 0);
    return best;
}

Graph gen_threshold(int n, std::uint64_t seed) {
    if (n < 0) throw input_error("gen_threshold: n must be nonnegative");
    SplitMix64 rng(seed);
    Graph g(n);
    for (int v = 0; v < n; ++v)
        if (rng.next_bit())
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph gen_perturbed(const Graph& g, int d, std::uint64_t seed) {
    if (d < 0) throw input_error("gen_perturbed: d must be nonnegative");
    const int n = g.vertex_count();
    Graph h = g;
    if (d == 0 || n < 2) return h;
    SplitMix64 rng(seed);
    std::vector<int> budget(static_cast<std::size_t>(n), d);
    std::vector<bool> touched(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    const long long attempts = static_cast<long long>(d) * n;
    for (long long k = 0; k < attempts; ++k) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        std::size_t key = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
        if (touched[key]) continue;
        if (budget[static_cast<std::size_t>(u)] == 0 || budget[static_cast<std::size_t>(v)] == 0) continue;
        touched[key] = true;
        h.toggle_edge(u, v);
        --budget[static_cast<std::size_t>(u)];
        --budget[static_cast<std::size_t>(v)];
    }
    return h;
}

BinaryMatrix gen_t_restricted(int m, int n, int d, std::uint64_t seed) {
    if (m < 0 || n < 0) throw input_error("gen_t_restricted: dimensions must be nonnegative");
    if (d < 0) throw input_error("gen_t_restricted: d must be nonnegative");
    SplitMix64 rng(seed);

    // Random staircase: nondecreasing suffix lengths, one per row.
    std::vector<int> suffix(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        suffix[static_cast<std::size_t>(i)] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
    std::sort(suffix.begin(), suffix.end());
    BinaryMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = n - suffix[static_cast<std::size_t>(i)]; j < n; ++j) a.set(i, j, true);

    if (d == 0 || m == 0 || n == 0) return a;
    std::vector<int> row_budget(static_cast<std::size_t>(m), d), col_budget(static_cast<std::size_t>(n), d);
    std::vector<bool> flipped(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), false);
    const long long attempts = static_cast<long long>(d) * (m + n);
    for (long long k = 0; k < attempts; ++k) {
        int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        std::size_t key = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
        if (flipped[key]) continue;
        if (row_budget[static_cast<std::size_t>(i)] == 0 || col_budget[static_cast<std::size_t>(j)] == 0) continue;
        flipped[key] = true;
        a.toggle(i, j);
        --row_budget[static_cast<std::size_t>(i)];
        --col_budget[static_cast<std::size_t>(j)];
    }
    return a;
}

BinaryMatrix gen_stair(int n, bool tweaked) {
    if (n < 4 || n % 2 != 0) throw input_error("gen_stair: n must be even and at least 4");
    const int half = n / 2;
    BinaryMatrix a(n + 1, n);
    for (int j = 0; j < half; ++j) a.set(half, j, true);
    for (int i = half + 1; i <= n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, true);
    if (tweaked) {
        for (int r = 0; r < half; ++r) a.set(r, half + r, true);
        for (int r = half + 1; r <= n; ++r) a.set(r, r - half - 1, false);
    }
    return a;
}

}  // namespace tdom
