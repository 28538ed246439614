#include "pcg/solver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pcg {

int PackingColoring::max_color() const {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

std::vector<Violation> verify_coloring(const Graph& g, const PackingColoring& c) {
    return verify_coloring(g, distance_matrix(g), c);
}

std::vector<Violation> verify_coloring(const Graph& g, const DistanceMatrix& dist,
                                       const PackingColoring& c) {
    const int n = g.order();
    if (static_cast<int>(c.colors.size()) != n)
        throw std::invalid_argument("coloring length does not match graph order");
    for (int v = 0; v < n; ++v)
        if (c.colors[v] <= 0) throw std::invalid_argument("colors must be positive");
    std::vector<Violation> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (c.colors[u] == c.colors[v] && dist(u, v) <= c.colors[u])
                out.push_back({u, v, c.colors[u], dist(u, v)});
    return out;
}

namespace {

// BFS order from a max-degree vertex (ties by index); restarted per
// component so disconnected inputs are covered too.
std::vector<int> search_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (start == -1 || g.degree(v) > g.degree(start))) start = v;
        seen[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

struct BudgetTracker {
    std::optional<long long> node_limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    long long nodes = 0;
    bool hit = false;

    explicit BudgetTracker(const SolveBudget& b) {
        node_limit = b.node_limit;
        if (b.time_limit) deadline = std::chrono::steady_clock::now() + *b.time_limit;
    }

    // Called once per expanded search node.
    bool tick() {
        ++nodes;
        if (node_limit && nodes > *node_limit) hit = true;
        // Clock checks are batched; a fine-grained limit is still honored
        // within ~1k nodes.
        if (deadline && (nodes & 1023) == 0 && std::chrono::steady_clock::now() > *deadline)
            hit = true;
        return !hit;
    }
};

// Complete DFS for one (graph, k) decision. Colors are forbidden
// incrementally: assigning color i to u blocks i on every vertex within
// distance i, and a vertex left with no available color fails the branch
// early. Neither step can lose a solution.
class DecisionSearch {
public:
    DecisionSearch(const Graph& g, const DistanceMatrix& dist, int k)
        : n_(g.order()), k_(k), order_(search_order(g)) {
        colors_.assign(n_, 0);
        blocked_.assign(static_cast<size_t>(n_) * (k_ + 1), 0);
        avail_.assign(n_, k_);
        ball_.resize(n_);
        // ball_[u][i-1] = vertices within distance i of u, the update set
        // for assigning color i at u.
        for (int u = 0; u < n_; ++u) {
            ball_[u].resize(k_);
            for (int v = 0; v < n_; ++v) {
                if (v == u) continue;
                int d = dist(u, v);
                for (int i = std::max(d, 1); i <= k_; ++i) ball_[u][i - 1].push_back(v);
            }
        }
    }

    DecideStatus run(BudgetTracker& budget, std::vector<int>& witness) {
        DecideStatus st = dfs(0, budget);
        if (st == DecideStatus::feasible) witness = colors_;
        return st;
    }

private:
    int& blocked(int v, int i) { return blocked_[static_cast<size_t>(v) * (k_ + 1) + i]; }

    bool assign(int u, int i) {
        colors_[u] = i;
        bool ok = true;
        for (int v : ball_[u][i - 1]) {
            if (++blocked(v, i) == 1 && --avail_[v] == 0 && colors_[v] == 0) ok = false;
        }
        return ok;
    }

    void unassign(int u, int i) {
        colors_[u] = 0;
        for (int v : ball_[u][i - 1])
            if (--blocked(v, i) == 0) ++avail_[v];
    }

    DecideStatus dfs(int pos, BudgetTracker& budget) {
        if (!budget.tick()) return DecideStatus::exhausted;
        if (pos == n_) return DecideStatus::feasible;
        const int u = order_[pos];
        for (int i = 1; i <= k_; ++i) {
            if (blocked(u, i) > 0) continue;
            bool viable = assign(u, i);
            if (viable) {
                DecideStatus st = dfs(pos + 1, budget);
                if (st != DecideStatus::infeasible) {
                    if (st == DecideStatus::exhausted) unassign(u, i);
                    return st;
                }
            }
            unassign(u, i);
        }
        return DecideStatus::infeasible;
    }

    int n_;
    int k_;
    std::vector<int> order_;
    std::vector<int> colors_;
    std::vector<int> blocked_;
    std::vector<int> avail_;
    std::vector<std::vector<std::vector<int>>> ball_;
};

DecideStatus decide_impl(const Graph& g, const DistanceMatrix& dist, int k,
                         BudgetTracker& budget, std::vector<int>& witness) {
    if (g.order() == 0) {
        witness.clear();
        return DecideStatus::feasible;
    }
    DecisionSearch search(g, dist, k);
    return search.run(budget, witness);
}

// Exhaustive max independent set, n <= 20.
int independence_number(const Graph& g) {
    const int n = g.order();
    std::vector<unsigned> nb(n, 0);
    for (auto [u, v] : g.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    // at each vertex: either take it (if allowed) or skip it
    struct Rec {
        int n;
        const std::vector<unsigned>& nb;
        int best = 0;
        void go(int v, unsigned forbidden, int size) {
            if (size + (n - v) <= best) return;  // can't beat best
            if (v == n) {
                best = std::max(best, size);
                return;
            }
            if (!(forbidden & (1u << v))) go(v + 1, forbidden | nb[v], size + 1);
            go(v + 1, forbidden, size);
        }
    } rec{n, nb};
    rec.go(0, 0, 0);
    return rec.best;
}

}  // namespace

SolveResult greedy_upper_bound(const Graph& g) {
    const int n = g.order();
    SolveResult res;
    res.witness.colors.assign(n, 0);
    if (n == 0) return res;
    DistanceMatrix dist = distance_matrix(g);
    std::vector<int> order = search_order(g);
    std::vector<std::vector<int>> by_color;  // by_color[i-1] = vertices colored i
    for (int u : order) {
        int chosen = 0;
        for (int i = 1; chosen == 0; ++i) {
            if (i > static_cast<int>(by_color.size())) by_color.emplace_back();
            bool ok = true;
            for (int w : by_color[i - 1]) {
                if (dist(u, w) <= i) {
                    ok = false;
                    break;
                }
            }
            if (ok) chosen = i;
        }
        res.witness.colors[u] = chosen;
        by_color[chosen - 1].push_back(u);
    }
    res.chi = res.witness.max_color();
    return res;
}

int lower_bound(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    int bound = 1;
    if (g.size() >= 1) bound = 2;
    if (n >= 2 && is_connected(g) && !is_star(g)) bound = std::max(bound, 3);
    if (n >= 2 && n <= 20) {
        int diam = diameter(g);
        if (diam != kUnreachable && diam <= 2)
            bound = std::max(bound, n - independence_number(g) + 1);
    }
    return bound;
}

DecideResult decide_k(const Graph& g, int k, const SolveBudget& budget) {
    if (k < 1) throw std::invalid_argument("decide_k needs k >= 1");
    DecideResult res;
    BudgetTracker tracker(budget);
    DistanceMatrix dist = distance_matrix(g);
    std::vector<int> witness;
    res.status = decide_impl(g, dist, k, tracker, witness);
    res.nodes = tracker.nodes;
    if (res.status == DecideStatus::feasible) res.witness.colors = std::move(witness);
    return res;
}

namespace {

// Exact solve of one connected component.
void solve_component(const Graph& g, BudgetTracker& budget, SolveResult& out) {
    SolveResult greedy = greedy_upper_bound(g);
    out.witness = greedy.witness;
    out.chi = greedy.chi;
    int lb = lower_bound(g);
    if (lb >= greedy.chi) return;  // greedy met the lower bound: proven exact
    DistanceMatrix dist = distance_matrix(g);
    for (int k = lb; k < greedy.chi; ++k) {
        std::vector<int> witness;
        DecideStatus st = decide_impl(g, dist, k, budget, witness);
        if (st == DecideStatus::feasible) {
            out.chi = k;
            out.witness.colors = std::move(witness);
            return;
        }
        if (st == DecideStatus::exhausted) {
            out.exhausted = true;  // keep the greedy bound
            return;
        }
        // infeasible at k is conclusive; continue upward
    }
    // all k < greedy.chi infeasible: greedy was optimal
}

}  // namespace

SolveResult chi_p(const Graph& g, const SolveBudget& budget) {
    SolveResult res;
    res.witness.colors.assign(g.order(), 0);
    if (g.order() == 0) return res;
    BudgetTracker tracker(budget);
    for (const Component& comp : components(g)) {
        SolveResult part;
        solve_component(comp.graph, tracker, part);
        res.chi = std::max(res.chi, part.chi);
        res.exhausted = res.exhausted || part.exhausted;
        for (size_t i = 0; i < comp.orig.size(); ++i)
            res.witness.colors[comp.orig[i]] = part.witness.colors[i];
    }
    res.nodes = tracker.nodes;
    return res;
}

namespace {

// Floyd-Warshall, deliberately separate from the BFS distances the solver
// uses.
std::vector<std::vector<int>> fw_distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i) {
            if (d[i][m] == kUnreachable) continue;
            for (int j = 0; j < n; ++j) {
                if (d[m][j] == kUnreachable) continue;
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
            }
        }
    return d;
}

// Enumerates assignments of colors 1..k to vertices pos.. in plain index
// order. A prefix containing a violated pair is dropped whole (no
// completion can repair it), which keeps the enumeration exhaustive.
bool brute_extend(const std::vector<std::vector<int>>& d, int k, int pos,
                  std::vector<int>& assign) {
    const int n = static_cast<int>(assign.size());
    if (pos == n) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int w = 0; w < pos; ++w) {
            if (assign[w] == c && d[w][pos] <= c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assign[pos] = c;
        if (brute_extend(d, k, pos + 1, assign)) return true;
    }
    assign[pos] = 0;
    return false;
}

}  // namespace

int brute_force_chi(const Graph& g) {
    const int n = g.order();
    if (n > 9) throw std::invalid_argument("brute_force_chi is limited to n <= 9");
    if (n == 0) return 0;
    auto d = fw_distances(g);
    std::vector<int> assign(n, 0);
    for (int k = 1;; ++k) {
        if (brute_extend(d, k, 0, assign)) return k;
    }
}

}  // namespace pcg
