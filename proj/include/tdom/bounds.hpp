#ifndef TDOM_BOUNDS_HPP
#define TDOM_BOUNDS_HPP

#include <string>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

// Exact maximum clique size via branch and bound with a greedy colouring
// bound (n <= 64).
int max_clique(const Graph& g);

// max(clique number, stability number), exact (n <= 64).
int rho(const Graph& g);

struct BoundPremises {
    bool h1_threshold = false;
    bool h2_threshold = false;
    bool g_avoids_h1 = false;
    bool g_avoids_h2 = false;

    bool all() const { return h1_threshold && h2_threshold && g_avoids_h1 && g_avoids_h2; }
};

// Report for the two-threshold-pattern size bound
// |V(G)| <= (2^m - 1) rho(G)^(k-2). When the premises hold the verdict can
// only be "holds"; a violated inequality raises an invariant error rather
// than producing a failing report.
struct BoundReport {
    int m = 0;                  // |V(H1)| + |V(H2)|
    int k = 0;                  // omega(H1) + alpha(H2)
    int rho_value = 0;
    std::string bound;          // exact decimal value of (2^m - 1) rho^(k-2)
    BoundPremises premises;
    bool holds = false;         // meaningful only when premises.all()
};

BoundReport check_thresholds2(const Graph& h1, const Graph& h2, const Graph& g);

struct ExtractResult {
    bool is_clique = false;
    std::vector<int> vertices;
};

// Constructive clique-or-stable-set of size at least ceil(n / (4t+2)) in a
// t-dominating graph, via the split reduction and greedy extraction from
// the larger side.
ExtractResult extract_clique_or_stable(const Graph& g, int t);

}  // namespace tdom

#endif
