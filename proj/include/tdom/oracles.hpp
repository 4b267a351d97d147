#ifndef TDOM_ORACLES_HPP
#define TDOM_ORACLES_HPP

#include <cstdint>
#include <functional>

#include "tdom/graph.hpp"
#include "tdom/matrix.hpp"

namespace tdom {

// Number of graphs on n labeled vertices (n <= 7).
std::uint64_t graph_count(int n);

// Graph for one edge mask; pair (u,v), u<v, in lexicographic order maps to
// consecutive bits starting at bit 0.
Graph graph_from_mask(int n, std::uint64_t mask);

// Visits all 2^(n choose 2) graphs in mask order (n <= 7).
void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit);

// Exact minimum local difference to any threshold graph on the same labeled
// vertex set (n <= 7). The catalog of threshold graphs per n is enumerated
// once and cached.
int oracle_min_threshold_distance(const Graph& g);

// Exact minimum local difference to any monotone matrix, by enumerating all
// staircase supports (m + n <= 24).
int oracle_min_monotone_distance(const BinaryMatrix& a);

// n seeded choices of "add isolated" vs "add universal".
Graph gen_threshold(int n, std::uint64_t seed);

// Toggles a seeded set of pairs forming an edit graph of max degree <= d,
// so the output is within local difference d of the input.
Graph gen_perturbed(const Graph& g, int d, std::uint64_t seed);

// Seeded random staircase, then cell flips under a per-row and per-column
// budget of d; the output is 2d-restricted.
BinaryMatrix gen_t_restricted(int m, int n, int d, std::uint64_t seed);

// The padded (n+1) x n staircase counterexample: n/2 zero rows, one row of
// n/2 ones then n/2 zeroes, n/2 one rows. The tweaked variant additionally
// raises one off-diagonal per top row and clears one per bottom row, making
// row and column sums nondecreasing. n must be even, n >= 4.
BinaryMatrix gen_stair(int n, bool tweaked = false);

}  // namespace tdom

#endif
