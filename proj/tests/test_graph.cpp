#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcg/families.hpp"
#include "pcg/graph.hpp"

using namespace pcg;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i) {
            if (d[i][m] == kUnreachable) continue;
            for (int j = 0; j < n; ++j)
                if (d[m][j] != kUnreachable) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
        }
    return d;
}

}  // namespace

TEST_CASE("graph construction keeps the representation canonical") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(0, 1);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(g.adjacent(3, 0));
    CHECK(g.size() == 3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("distance matrix on the named examples") {
    DistanceMatrix p4 = distance_matrix(gen_path(4).graph);
    CHECK(p4(0, 3) == 3);
    CHECK(p4(1, 2) == 1);
    CHECK(p4(2, 2) == 0);

    DistanceMatrix k3 = distance_matrix(gen_complete(3).graph);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(k3(u, v) == (u == v ? 0 : 1));

    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    DistanceMatrix d = distance_matrix(two_edges);
    CHECK(d(0, 2) == kUnreachable);
    CHECK(d(0, 1) == 1);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall on random graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.4, rng);
        DistanceMatrix d = distance_matrix(g);
        auto fw = floyd_warshall(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) CHECK(d(u, v) == fw[u][v]);
    }
}

TEST_CASE("delete_vertex compacts indices and reports the map") {
    SUBCASE("K_3 minus a vertex is K_2") {
        VertexDeletion d = delete_vertex(gen_complete(3).graph, 1);
        CHECK(d.graph.order() == 2);
        CHECK(d.graph.size() == 1);
        CHECK(d.old_to_new == std::vector<int>{0, -1, 1});
    }
    SUBCASE("C_5 minus any vertex is P_4") {
        for (int v = 0; v < 5; ++v) {
            VertexDeletion d = delete_vertex(gen_cycle(5).graph, v);
            CHECK(d.graph.order() == 4);
            CHECK(d.graph.size() == 3);
            CHECK(oracles::isomorphic(d.graph, gen_path(4).graph));
        }
    }
    SUBCASE("star minus its center is edgeless") {
        VertexDeletion d = delete_vertex(gen_star(4).graph, 0);
        CHECK(d.graph.order() == 4);
        CHECK(d.graph.size() == 0);
    }
    CHECK_THROWS_AS(delete_vertex(gen_path(3).graph, 3), std::out_of_range);
}

TEST_CASE("components partition deterministically") {
    SUBCASE("connected input gives itself back") {
        Graph g = gen_cycle(6).graph;
        auto comps = components(g);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].graph == g);
        CHECK(comps[0].orig == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
    SUBCASE("P_5 minus the middle vertex: two P_2") {
        VertexDeletion d = delete_vertex(gen_path(5).graph, 2);
        auto comps = components(d.graph);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].graph.order() == 2);
        CHECK(comps[1].graph.order() == 2);
        CHECK(comps[0].graph.size() == 1);
    }
    SUBCASE("star minus center: singletons") {
        VertexDeletion d = delete_vertex(gen_star(5).graph, 0);
        CHECK(components(d.graph).size() == 5);
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(gen_friendship(1).graph) == 1);  // friendship(1) is K_3
    for (int t = 2; t <= 4; ++t) CHECK(diameter(gen_friendship(t).graph) == 2);
    CHECK(diameter(gen_path(4).graph) == 3);
    for (int n = 2; n <= 6; ++n) CHECK(diameter(gen_complete(n).graph) == 1);
    CHECK(diameter(Graph(1)) == 0);
    CHECK(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})) == kUnreachable);
    CHECK_THROWS_AS(diameter(Graph(0)), std::invalid_argument);
}

TEST_CASE("star and tree predicates") {
    CHECK(is_star(gen_star(1).graph));  // K_2
    CHECK(is_star(gen_star(5).graph));
    CHECK(is_star(gen_path(3).graph));
    CHECK_FALSE(is_star(gen_path(4).graph));
    CHECK_FALSE(is_star(gen_complete(3).graph));
    CHECK_FALSE(is_star(Graph(1)));
    CHECK(is_tree(gen_caterpillar({{2, 0, 3}}).graph));
    CHECK_FALSE(is_tree(gen_cycle(4).graph));
}

TEST_CASE("deletion never shortens distances, and component orders sum to n-1") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.35, rng);
        DistanceMatrix before = distance_matrix(g);
        for (int v = 0; v < n; ++v) {
            VertexDeletion d = delete_vertex(g, v);
            DistanceMatrix after = distance_matrix(d.graph);
            for (int a = 0; a < n; ++a) {
                if (a == v) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == v || a == b) continue;
                    int da = after(d.old_to_new[a], d.old_to_new[b]);
                    if (da != kUnreachable) CHECK(da >= before(a, b));
                }
            }
            int total = 0;
            for (const auto& c : components(d.graph)) total += c.graph.order();
            CHECK(total == n - 1);
        }
    }
}
