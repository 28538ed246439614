// solver.hpp - exact packing chromatic number. Iterative deepening over k
// with a complete distance-pruned DFS per decision, a greedy upper bound,
// combinatorial lower bounds, a coloring verifier and an independent
// brute-force oracle for small graphs.

#ifndef PCG_SOLVER_HPP
#define PCG_SOLVER_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

// Vertex -> color (>= 1) assignment.
struct PackingColoring {
    std::vector<int> colors;

    int max_color() const;
};

struct SolveBudget {
    std::optional<long long> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;

    bool unlimited() const { return !node_limit && !time_limit; }
};

// A pair u < v sharing color `color` at distance <= color.
struct Violation {
    int u;
    int v;
    int color;
    int distance;
};

// Every violated pair; empty means the coloring is a packing coloring.
// Cross-component pairs never violate (their distance is kUnreachable).
std::vector<Violation> verify_coloring(const Graph& g, const PackingColoring& c);
std::vector<Violation> verify_coloring(const Graph& g, const DistanceMatrix& dist,
                                       const PackingColoring& c);

struct SolveResult {
    int chi = 0;
    PackingColoring witness;
    bool exhausted = false;  // budget hit; chi is then only an upper bound
    long long nodes = 0;
};

// First-fit over the solver's fixed vertex order; result is always a valid
// packing coloring, so chi is an upper bound.
SolveResult greedy_upper_bound(const Graph& g);

// Combines: 1 always; 2 with an edge; 3 for a connected non-star on >= 2
// vertices; n - alpha + 1 when the diameter is <= 2 (alpha by exhaustive
// search, attempted for n <= 20 only). Expects a connected graph.
int lower_bound(const Graph& g);

enum class DecideStatus { feasible, infeasible, exhausted };

struct DecideResult {
    DecideStatus status = DecideStatus::infeasible;
    PackingColoring witness;  // filled when feasible
    long long nodes = 0;
};

// Complete search: is there a packing coloring of g with colors 1..k?
// Deterministic given identical inputs. Expects a connected graph.
DecideResult decide_k(const Graph& g, int k, const SolveBudget& budget = {});

// Exact chi_p. Components are solved independently and combined by max;
// the empty graph has chi 0. If the budget runs out, `exhausted` is set
// and chi is the best upper bound found.
SolveResult chi_p(const Graph& g, const SolveBudget& budget = {});

// Independent oracle: enumerate all assignments V -> {1..k} for k = 1,2,...
// and return the first feasible k. Shares no search machinery with
// decide_k (distances come from its own Floyd-Warshall). Enforces n <= 9.
int brute_force_chi(const Graph& g);

}  // namespace pcg

#endif  // PCG_SOLVER_HPP
