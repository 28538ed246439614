#include "pcg/gap.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcg {

int GapReport::delta_of(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        throw std::invalid_argument("vertex was not evaluated in this report");
    return deltas[it - vertices.begin()];
}

namespace {

std::vector<int> scope_vertices(const Graph& g, GapScope scope, const std::vector<int>& spine) {
    const int n = g.order();
    std::vector<int> out;
    switch (scope) {
        case GapScope::all:
            out.resize(n);
            for (int v = 0; v < n; ++v) out[v] = v;
            break;
        case GapScope::spine:
            if (spine.empty()) throw std::invalid_argument("spine scope needs a spine");
            out = spine;
            std::sort(out.begin(), out.end());
            break;
        case GapScope::non_leaf: {
            if (g.size() != n - static_cast<int>(components(g).size()))
                throw std::invalid_argument("non_leaf scope needs a forest");
            for (int v = 0; v < n; ++v)
                if (g.degree(v) >= 2) out.push_back(v);
            // K_1, K_2 and disjoint unions of them have no internal vertex.
            if (out.empty())
                for (int v = 0; v < n; ++v) out.push_back(v);
            break;
        }
    }
    return out;
}

}  // namespace

GapReport gap_report(const Graph& g, const SolveBudget& budget, GapScope scope,
                     const std::vector<int>& spine) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("gap_report needs a non-empty graph");

    GapReport rep;
    rep.scope = scope;
    SolveResult base = chi_p(g, budget);
    rep.chi = base.chi;
    rep.exact = !base.exhausted;
    rep.nodes = base.nodes;

    rep.vertices = scope_vertices(g, scope, spine);
    for (int v : rep.vertices) {
        VertexDeletion del = delete_vertex(g, v);
        SolveResult sub = chi_p(del.graph, budget);
        rep.chi_minus.push_back(sub.chi);
        rep.deltas.push_back(rep.chi - sub.chi);
        rep.nodes += sub.nodes;
        if (sub.exhausted) rep.exact = false;
    }

    rep.mu = *std::max_element(rep.deltas.begin(), rep.deltas.end());
    rep.delta_set = rep.deltas;
    std::sort(rep.delta_set.begin(), rep.delta_set.end());
    rep.delta_set.erase(std::unique(rep.delta_set.begin(), rep.delta_set.end()),
                        rep.delta_set.end());
    for (size_t i = 0; i < rep.vertices.size(); ++i)
        if (rep.deltas[i] == rep.mu) rep.argmax.push_back(rep.vertices[i]);
    if (scope == GapScope::all)
        rep.critical = *std::min_element(rep.deltas.begin(), rep.deltas.end()) >= 1;
    return rep;
}

int mu_p(const Graph& g, const SolveBudget& budget) { return gap_report(g, budget).mu; }

bool is_vertex_critical(const Graph& g, const SolveBudget& budget) {
    return *gap_report(g, budget).critical;
}

}  // namespace pcg
