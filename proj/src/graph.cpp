#include "pcg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pcg {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::size() const {
    size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return static_cast<int>(twice / 2);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

void bfs_fill(const Graph& g, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    DistanceMatrix m(n);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, dist);
        for (int v = 0; v < n; ++v) m.at(s, v) = dist[v];
    }
    return m;
}

VertexDeletion delete_vertex(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    VertexDeletion out;
    out.old_to_new.assign(n, -1);
    int next = 0;
    for (int u = 0; u < n; ++u)
        if (u != v) out.old_to_new[u] = next++;
    out.graph = Graph(n - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.graph.add_edge(out.old_to_new[a], out.old_to_new[b]);
    return out;
}

std::vector<Component> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = count;
                    q.push(w);
                }
            }
        }
        ++count;
    }
    // Component ids already follow smallest-original-vertex order because
    // seeds are scanned ascending.
    std::vector<Component> out(count);
    std::vector<int> local(n, -1);
    for (int u = 0; u < n; ++u) {
        Component& c = out[comp[u]];
        local[u] = static_cast<int>(c.orig.size());
        c.orig.push_back(u);
    }
    for (auto& c : out) c.graph = Graph(static_cast<int>(c.orig.size()));
    for (auto [a, b] : g.edges()) out[comp[a]].graph.add_edge(local[a], local[b]);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return components(g).size() == 1;
}

int diameter(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("diameter of the empty graph is undefined");
    int best = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] == kUnreachable) return kUnreachable;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1 || !is_connected(g)) return false;
    int big = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) ++big;
    return big <= 1;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

}  // namespace pcg
