#include "tdom/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "tdom/errors.hpp"
#include "tdom/pipeline.hpp"

namespace tdom {

namespace {

struct CliqueSolver {
    std::array<std::uint64_t, 64> adj{};
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(cand) <= best) return;

        // Greedy colouring of the candidates; a clique among the first i
        // coloured vertices uses at most bound[i] colours.
        std::array<int, 64> order{}, bound{};
        int count = 0, colour = 0;
        std::uint64_t rest = cand;
        while (rest) {
            ++colour;
            std::uint64_t cls = rest;
            while (cls) {
                int v = std::countr_zero(cls);
                cls &= ~adj[static_cast<std::size_t>(v)];
                cls &= ~(1ULL << v);
                rest &= ~(1ULL << v);
                order[static_cast<std::size_t>(count)] = v;
                bound[static_cast<std::size_t>(count)] = colour;
                ++count;
            }
        }
        std::uint64_t pool = cand;
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[static_cast<std::size_t>(i)] <= best) return;
            int v = order[static_cast<std::size_t>(i)];
            expand(pool & adj[static_cast<std::size_t>(v)], size + 1);
            pool &= ~(1ULL << v);
        }
    }
};

int max_clique_mask(const std::array<std::uint64_t, 64>& adj, int n) {
    CliqueSolver solver;
    solver.adj = adj;
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    solver.expand(all, 0);
    return solver.best;
}

std::array<std::uint64_t, 64> pack64(const Graph& g) {
    std::array<std::uint64_t, 64> adj{};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= 1ULL << v;
    return adj;
}

// Saturating 128-bit helpers; saturation can only overstate the bound, so a
// saturated comparison still decides the inequality exactly.
constexpr unsigned __int128 kSaturated = ~static_cast<unsigned __int128>(0);

unsigned __int128 sat_mul(unsigned __int128 a, unsigned __int128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::string uint128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

int max_clique(const Graph& g) {
    if (g.vertex_count() > 64) throw resource_error("max_clique: n is limited to 64");
    if (g.vertex_count() == 0) return 0;
    return max_clique_mask(pack64(g), g.vertex_count());
}

int rho(const Graph& g) {
    if (g.vertex_count() > 64) throw resource_error("rho: n is limited to 64");
    return std::max(max_clique(g), max_clique(g.complement()));
}

BoundReport check_thresholds2(const Graph& h1, const Graph& h2, const Graph& g) {
    if (h1.vertex_count() > 8 || h2.vertex_count() > 8)
        throw input_error("check_thresholds2: patterns are limited to 8 vertices");
    BoundReport report;
    report.m = h1.vertex_count() + h2.vertex_count();
    report.premises.h1_threshold = is_threshold(h1);
    report.premises.h2_threshold = is_threshold(h2);
    report.premises.g_avoids_h1 = !has_induced(g, h1);
    report.premises.g_avoids_h2 = !has_induced(g, h2);
    report.k = max_clique(h1) + max_clique(h2.complement());
    report.rho_value = rho(g);

    const int exponent = report.k - 2;
    const unsigned __int128 factor = (static_cast<unsigned __int128>(1) << report.m) - 1;
    if (exponent >= 0) {
        unsigned __int128 value = factor;
        for (int i = 0; i < exponent; ++i)
            value = sat_mul(value, static_cast<unsigned __int128>(report.rho_value));
        report.bound = uint128_to_string(value);
        report.holds = static_cast<unsigned __int128>(g.vertex_count()) <= value;
    } else {
        // Negative exponent: compare n * rho^(2-k) <= 2^m - 1 exactly.
        unsigned __int128 lhs = static_cast<unsigned __int128>(g.vertex_count());
        for (int i = 0; i < -exponent; ++i)
            lhs = sat_mul(lhs, static_cast<unsigned __int128>(report.rho_value));
        report.bound = uint128_to_string(factor) + "/" +
                       uint128_to_string([&] {
                           unsigned __int128 d = 1;
                           for (int i = 0; i < -exponent; ++i)
                               d = sat_mul(d, static_cast<unsigned __int128>(report.rho_value));
                           return d;
                       }());
        report.holds = lhs <= factor;
    }

    if (report.premises.all() && !report.holds)
        throw invariant_error("check_thresholds2: inequality fails under valid premises");
    return report;
}

ExtractResult extract_clique_or_stable(const Graph& g, int t) {
    if (t < 0) throw input_error("extract_clique_or_stable: t must be nonnegative");
    if (!is_t_dominating(g, t)) throw input_error("extract_clique_or_stable: graph is not t-dominating");
    const int n = g.vertex_count();

    SplitReduction reduced = reduce_to_split(g, t, Verify::off);
    const bool use_clique = reduced.partition.clique.size() >= reduced.partition.stable.size();
    const std::vector<int>& side = use_clique ? reduced.partition.clique : reduced.partition.stable;

    // Working relation inside the chosen side: non-edges of G on the clique
    // side, edges of G on the stable side. Either way its max degree is at
    // most 2t, so greedy peeling keeps every (2t+1)-th vertex.
    auto related = [&](int a, int b) { return use_clique ? !g.adjacent(a, b) : g.adjacent(a, b); };

    for (int v : side) {
        int deg = 0;
        for (int w : side)
            if (w != v && related(v, w)) ++deg;
        if (deg > 2 * t)
            throw invariant_error("extract_clique_or_stable: working degree exceeds 2t");
    }

    std::vector<int> remaining = side;
    ExtractResult out;
    out.is_clique = use_clique;
    while (!remaining.empty()) {
        int pick = remaining.front();
        int pick_deg = static_cast<int>(remaining.size());
        for (int v : remaining) {
            int deg = 0;
            for (int w : remaining)
                if (w != v && related(v, w)) ++deg;
            if (deg < pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        out.vertices.push_back(pick);
        std::vector<int> next;
        for (int v : remaining)
            if (v != pick && !related(pick, v)) next.push_back(v);
        remaining = std::move(next);
    }
    std::sort(out.vertices.begin(), out.vertices.end());

    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
            if (g.adjacent(out.vertices[i], out.vertices[j]) != use_clique)
                throw invariant_error("extract_clique_or_stable: extracted set fails validation");
    const long long need = (static_cast<long long>(n) + 4 * t + 1) / (4 * t + 2);
    if (static_cast<long long>(out.vertices.size()) < need)
        throw invariant_error("extract_clique_or_stable: extracted set is below the guarantee");
    return out;
}

}  // namespace tdom
