// gap.hpp - per-vertex deletion analysis: chi_p(G-v) for each v, the
// packing coloring gap mu_p, the delta set and vertex-criticality.

#ifndef PCG_GAP_HPP
#define PCG_GAP_HPP

#include <optional>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/solver.hpp"

namespace pcg {

// Which vertices to delete. `all` is the definition; `spine` restricts to
// a designated central path (sound for caterpillars: a leaf deletion never
// drops chi_p below its spine neighbor's deletion); `non_leaf` extends the
// same argument to every tree.
enum class GapScope { all, spine, non_leaf };

struct GapReport {
    int chi = 0;
    bool exact = true;  // false when any solve was budget-truncated
    GapScope scope = GapScope::all;
    std::vector<int> vertices;   // evaluated vertices, ascending
    std::vector<int> chi_minus;  // chi_p(G - v) per evaluated vertex
    std::vector<int> deltas;     // chi - chi_minus
    int mu = 0;
    std::vector<int> delta_set;  // distinct deltas, ascending
    std::vector<int> argmax;     // evaluated vertices attaining mu
    std::optional<bool> critical;  // all deltas >= 1; only set for full scope
    long long nodes = 0;

    int delta_of(int v) const;  // throws if v was not evaluated
};

// Deletes each in-scope vertex of g and solves the remainder exactly
// (components are handled inside chi_p). Throws on the empty graph, or
// when scope needs data the caller did not supply (spine) or the graph
// does not support (non_leaf requires a forest with >= 1 non-leaf, except
// n <= 2 which falls back to full scope).
GapReport gap_report(const Graph& g, const SolveBudget& budget = {},
                     GapScope scope = GapScope::all, const std::vector<int>& spine = {});

int mu_p(const Graph& g, const SolveBudget& budget = {});

bool is_vertex_critical(const Graph& g, const SolveBudget& budget = {});

}  // namespace pcg

#endif  // PCG_GAP_HPP
