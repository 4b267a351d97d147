#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tdom/errors.hpp"
#include "tdom/graph.hpp"
#include "tdom/oracles.hpp"
#include "tdom/rng.hpp"

using namespace tdom;

namespace {

Graph c4_with_chord() {
    Graph g = Graph::cycle(4);
    g.add_edge(0, 2);
    return g;
}

// Test-side induced-subgraph oracle: try every injective assignment.
bool brute_induced(const Graph& g, const Graph& p) {
    const int n = g.vertex_count(), k = p.vertex_count();
    if (k > n) return false;
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v)
            if (pick[static_cast<std::size_t>(v)]) chosen.push_back(v);
        std::sort(chosen.begin(), chosen.end());
        do {
            bool match = true;
            for (int a = 0; a < k && match; ++a)
                for (int b = a + 1; b < k && match; ++b)
                    match = g.adjacent(chosen[static_cast<std::size_t>(a)],
                                       chosen[static_cast<std::size_t>(b)]) == p.adjacent(a, b);
            if (match) return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

bool threshold_by_forbidden(const Graph& g) {
    return !has_induced(g, pattern_c4()) && !has_induced(g, pattern_2k2()) &&
           !has_induced(g, pattern_p4());
}

}  // namespace

TEST_CASE("local difference basics") {
    Graph k3 = Graph::complete(3);
    CHECK(local_difference(k3, k3) == 0);
    CHECK(local_difference(k3, Graph::edgeless(3)) == 2);
    CHECK(local_difference(Graph::cycle(4), c4_with_chord()) == 1);
    CHECK(local_difference(c4_with_chord(), Graph::cycle(4)) == 1);
    CHECK_THROWS_AS(local_difference(k3, Graph::complete(4)), input_error);
}

TEST_CASE("local difference is a metric on seeded triples") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        Graph a = graph_from_mask(n, rng.next() & (graph_count(n) - 1));
        Graph b = graph_from_mask(n, rng.next() & (graph_count(n) - 1));
        Graph c = graph_from_mask(n, rng.next() & (graph_count(n) - 1));
        CHECK(local_difference(a, b) == local_difference(b, a));
        CHECK((local_difference(a, b) == 0) == (a == b));
        CHECK(local_difference(a, c) <= local_difference(a, b) + local_difference(b, c));
    }
}

TEST_CASE("dominates with certificates") {
    Graph k4 = Graph::complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) CHECK(dominates(k4, u, v, 0).dominates);

    Graph c4 = Graph::cycle(4);
    auto r = dominates(c4, 0, 1, 0);
    CHECK_FALSE(r.dominates);
    CHECK(r.certificate.witnesses == std::vector<int>{2});

    Graph p4 = Graph::path(4);
    auto s = dominates(p4, 0, 3, 1);
    CHECK(s.dominates);
    CHECK(s.certificate.witnesses == std::vector<int>{2});

    for (int w : r.certificate.witnesses) {
        CHECK(c4.adjacent(w, 1));
        CHECK_FALSE(c4.adjacent(w, 0));
    }
    CHECK_THROWS_AS(dominates(c4, 1, 1, 0), input_error);
    CHECK_THROWS_AS(dominates(c4, 0, 4, 0), input_error);
    CHECK_THROWS_AS(dominates(c4, 0, 1, -1), input_error);
}

TEST_CASE("t-domination and its minimum") {
    CHECK(is_t_dominating(Graph::complete(5), 0));
    CHECK_FALSE(is_t_dominating(Graph::cycle(4), 0));
    CHECK(is_t_dominating(Graph::cycle(4), 1));
    CHECK(is_t_dominating(pattern_2k2(), 1));

    CHECK(min_domination(Graph::complete(1)) == 0);
    CHECK(min_domination(Graph::cycle(4)) == 1);
    CHECK(min_domination(Graph::path(4)) == 1);
    CHECK(min_domination(Graph(0)) == 0);
}

TEST_CASE("min_domination agrees with is_t_dominating") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        Graph g = graph_from_mask(n, rng.next() & (graph_count(n) - 1));
        int t0 = min_domination(g);
        for (int t = 0; t <= n; ++t) CHECK(is_t_dominating(g, t) == (t >= t0));
    }
}

TEST_CASE("find_induced basics") {
    CHECK(has_induced(pattern_p4(), pattern_p4()));
    CHECK_FALSE(has_induced(Graph::complete(4), pattern_2k2()));
    CHECK_FALSE(has_induced(Graph::cycle(5), pattern_c4()));
    auto w = find_induced(Graph::cycle(4), pattern_c4());
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(find_induced(Graph::cycle(4), Graph::complete(9)), input_error);
}

TEST_CASE("find_induced agrees with permutation search on all 5-vertex graphs") {
    for (std::uint64_t mask = 0; mask < graph_count(5); mask += 7) {
        Graph g = graph_from_mask(5, mask);
        for (const Graph& p : {pattern_c4(), pattern_2k2(), pattern_p4()})
            CHECK(has_induced(g, p) == brute_induced(g, p));
    }
}

TEST_CASE("find_induced handles arbitrary patterns and returns valid embeddings") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 400; ++trial) {
        int np = 1 + static_cast<int>(rng.next_below(5));
        int ng = std::min(np + static_cast<int>(rng.next_below(4)), 7);
        Graph p = graph_from_mask(np, rng.next() & (graph_count(np) - 1));
        Graph g = graph_from_mask(ng, rng.next() & (graph_count(ng) - 1));
        auto witness = find_induced(g, p);
        CHECK(witness.has_value() == brute_induced(g, p));
        if (witness) {
            for (int a = 0; a < np; ++a)
                for (int b = a + 1; b < np; ++b)
                    CHECK(g.adjacent((*witness)[static_cast<std::size_t>(a)],
                                     (*witness)[static_cast<std::size_t>(b)]) == p.adjacent(a, b));
        }
    }
}

TEST_CASE("threshold recognition and build sequences") {
    CHECK(is_threshold(Graph(0)));
    CHECK(is_threshold(Graph::complete(1)));
    CHECK_FALSE(is_threshold(Graph::path(4)));

    auto seq = threshold_sequence(c4_with_chord());
    REQUIRE(seq.has_value());
    REQUIRE(seq->size() == 4);
    // Deterministic peel: universal 0, universal 2, isolated 1, isolated 3;
    // reversed, that builds 3, 1, then 2 and 0 as universal additions.
    CHECK((*seq)[0].vertex == 3);
    CHECK_FALSE((*seq)[0].universal);
    CHECK((*seq)[1].vertex == 1);
    CHECK_FALSE((*seq)[1].universal);
    CHECK((*seq)[2].vertex == 2);
    CHECK((*seq)[2].universal);
    CHECK((*seq)[3].vertex == 0);
    CHECK((*seq)[3].universal);

    // Replay the sequence and compare.
    Graph rebuilt(4);
    std::vector<int> present;
    for (const auto& step : *seq) {
        if (step.universal)
            for (int u : present) rebuilt.add_edge(u, step.vertex);
        present.push_back(step.vertex);
    }
    CHECK(rebuilt == c4_with_chord());
}

TEST_CASE("split recognition") {
    auto full = split_partition(Graph::complete(5));
    REQUIRE(full.has_value());
    CHECK(full->clique.size() == 5);
    CHECK(full->stable.empty());

    CHECK_FALSE(split_partition(Graph::cycle(4)).has_value());
    CHECK_FALSE(is_split(Graph::cycle(5)));

    auto part = split_partition(c4_with_chord());
    REQUIRE(part.has_value());
    CHECK(part->clique == std::vector<int>{0, 1, 2});
    CHECK(part->stable == std::vector<int>{3});

    CHECK(is_split(Graph(0)));
}

TEST_CASE("split recognition agrees with the forbidden-subgraph characterization") {
    const Graph c4 = pattern_c4(), kk = pattern_2k2(), c5 = pattern_c5();
    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, [&](const Graph& g) {
            bool forbidden_free =
                !has_induced(g, c4) && !has_induced(g, kk) && !has_induced(g, c5);
            CHECK(is_split(g) == forbidden_free);
        });
}

TEST_CASE("split half-graph recognition") {
    CHECK(is_split_half_graph(Graph::complete(1)));
    CHECK_FALSE(is_split_half_graph(pattern_2k2()));
    CHECK(is_split_half_graph(Graph(0)));
}

TEST_CASE("recognizers agree on all graphs with at most 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        enumerate_graphs(n, [](const Graph& g) {
            const bool thr = is_threshold(g);
            CHECK(thr == is_t_dominating(g, 0));
            CHECK(thr == threshold_by_forbidden(g));
            CHECK(thr == is_split_half_graph(g));
        });
}

TEST_CASE("recognizers agree on seeded graphs with 7 to 12 vertices") {
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 7 + static_cast<int>(rng.next_below(6));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_bit()) g.add_edge(u, v);
        // Mix in threshold graphs so both verdicts get exercised.
        if (trial % 3 == 0) g = gen_threshold(n, rng.next());
        const bool thr = is_threshold(g);
        CHECK(thr == is_t_dominating(g, 0));
        CHECK(thr == threshold_by_forbidden(g));
        CHECK(thr == is_split_half_graph(g));
    }
}

TEST_CASE("perturbing a 0-dominating graph keeps 2d-domination") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng.next_below(40));
        int d = static_cast<int>(rng.next_below(4));
        Graph g = gen_threshold(n, rng.next());
        Graph h = gen_perturbed(g, d, rng.next());
        CHECK(local_difference(g, h) <= d);
        CHECK(is_t_dominating(h, 2 * d));
    }
}
