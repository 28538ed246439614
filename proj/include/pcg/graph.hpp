// graph.hpp - simple undirected graphs, BFS distances, vertex deletion,
// connected components. Everything downstream builds on these types.

#ifndef PCG_GRAPH_HPP
#define PCG_GRAPH_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

// Sentinel for "no path". Strictly greater than any distance and any color
// that can occur, so the packing constraint d(u,v) > i holds automatically
// for cross-component pairs.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted ascending; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;  // number of edges

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    void add_edge(int u, int v);

    // Sorted list of edges (u < v), suitable for serialization.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// All-pairs shortest path lengths. dist(u,v) == kUnreachable across
// components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {}

    int order() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

// One BFS per vertex; exact on unweighted graphs.
DistanceMatrix distance_matrix(const Graph& g);

// Result of deleting one vertex: the smaller graph plus the old->new index
// map (old_to_new[deleted] == -1). Remaining vertices keep their relative
// order.
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new;
};

VertexDeletion delete_vertex(const Graph& g, int v);

// A connected component with its own compact indexing; orig[new] == old.
struct Component {
    Graph graph;
    std::vector<int> orig;
};

// Components ordered by smallest original vertex index.
std::vector<Component> components(const Graph& g);

bool is_connected(const Graph& g);

// Max finite distance; kUnreachable when disconnected, 0 for a single
// vertex. Throws on the empty graph.
int diameter(const Graph& g);

// Connected, n >= 2, and at most one vertex of degree >= 2 (i.e. K_{1,k}).
bool is_star(const Graph& g);

// Connected and acyclic.
bool is_tree(const Graph& g);

// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace pcg

#endif  // PCG_GRAPH_HPP
