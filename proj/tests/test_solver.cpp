#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcg/families.hpp"
#include "pcg/solver.hpp"

using namespace pcg;

TEST_CASE("verify_coloring on the named examples") {
    CHECK(verify_coloring(gen_path(4).graph, {{2, 1, 3, 1}}).empty());
    CHECK(verify_coloring(gen_path(3).graph, {{1, 2, 1}}).empty());

    auto bad = verify_coloring(gen_path(2).graph, {{1, 1}});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].u == 0);
    CHECK(bad[0].v == 1);
    CHECK(bad[0].color == 1);

    CHECK_THROWS_AS(verify_coloring(gen_path(3).graph, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(gen_path(2).graph, {{0, 1}}), std::invalid_argument);

    // cross-component pairs never violate
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(verify_coloring(two, {{5, 1, 5, 1}}).empty());
}

TEST_CASE("greedy upper bound") {
    for (int n = 1; n <= 7; ++n) CHECK(greedy_upper_bound(gen_complete(n).graph).chi == n);
    CHECK(greedy_upper_bound(Graph(5)).chi == 1);
    SolveResult g = greedy_upper_bound(gen_path(10).graph);
    CHECK(g.chi <= 4);
    CHECK(g.chi >= 3);
    CHECK(verify_coloring(gen_path(10).graph, g.witness).empty());
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(gen_star(5).graph) == 2);
    CHECK(lower_bound(gen_path(4).graph) == 3);
    CHECK(lower_bound(gen_friendship(3).graph) == 5);  // n - alpha + 1 = 7 - 3 + 1
    CHECK(lower_bound(Graph(1)) == 1);
}

TEST_CASE("decide_k on the named examples") {
    CHECK(decide_k(gen_path(4).graph, 2).status == DecideStatus::infeasible);
    DecideResult f = decide_k(gen_path(4).graph, 3);
    REQUIRE(f.status == DecideStatus::feasible);
    CHECK(verify_coloring(gen_path(4).graph, f.witness).empty());
    CHECK(f.witness.max_color() <= 3);

    CHECK(decide_k(gen_complete(3).graph, 2).status == DecideStatus::infeasible);
    DecideResult k3 = decide_k(gen_complete(3).graph, 3);
    REQUIRE(k3.status == DecideStatus::feasible);
    std::set<int> used(k3.witness.colors.begin(), k3.witness.colors.end());
    CHECK(used.size() == 3);
}

TEST_CASE("chi_p on the named examples") {
    CHECK(chi_p(gen_complete(5).graph).chi == 5);
    CHECK(chi_p(gen_complete_bipartite(2, 3).graph).chi == 3);
    CHECK(chi_p(gen_cycle(7).graph).chi == 4);
    CHECK(chi_p(Graph(0)).chi == 0);

    SolveResult res = chi_p(gen_caterpillar({{2, 2, 2}}).graph);
    CHECK(res.chi == 4);
    CHECK(verify_coloring(gen_caterpillar({{2, 2, 2}}).graph, res.witness).empty());
    CHECK(res.witness.max_color() == res.chi);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_chi(gen_path(5).graph) == 3);
    CHECK(brute_force_chi(gen_star(4).graph) == 2);
    CHECK(brute_force_chi(gen_cycle(4).graph) == 3);
    CHECK(brute_force_chi(Graph(0)) == 0);
    CHECK_THROWS_AS(brute_force_chi(gen_path(10).graph), std::invalid_argument);
}

TEST_CASE("oracle equivalence on families and random graphs up to n = 8") {
    std::vector<Graph> pool;
    for (int n = 1; n <= 8; ++n) pool.push_back(gen_path(n).graph);
    for (int n = 3; n <= 8; ++n) pool.push_back(gen_cycle(n).graph);
    for (int n = 1; n <= 8; ++n) pool.push_back(gen_complete(n).graph);
    for (int m = 1; m <= 4; ++m)
        for (int n = m; m + n <= 8; ++n) pool.push_back(gen_complete_bipartite(m, n).graph);
    for (const auto& s : enumerate_caterpillars(8)) pool.push_back(gen_caterpillar(s).graph);
    for (const auto& s : enumerate_spiders(3, 4)) {
        if (s.order() <= 8) pool.push_back(gen_spider(s).graph);
    }
    pool.push_back(gen_friendship(2).graph);
    pool.push_back(gen_windmill(4, 2).graph);
    std::mt19937 rng(424242);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        pool.push_back(g);
    }
    for (const auto& g : pool) {
        SolveResult res = chi_p(g);
        CHECK(res.chi == brute_force_chi(g));
        CHECK(verify_coloring(g, res.witness).empty());
        if (g.order() > 0) CHECK(res.witness.max_color() == res.chi);
    }
}

TEST_CASE("greedy and lower bounds sandwich the exact value") {
    for (const auto& s : enumerate_caterpillars(9)) {
        Graph g = gen_caterpillar(s).graph;
        int exact = chi_p(g).chi;
        CHECK(greedy_upper_bound(g).chi >= exact);
        CHECK(lower_bound(g) <= exact);
    }
}

TEST_CASE("budget exhaustion is reported, never silently exact") {
    SolveBudget tiny;
    tiny.node_limit = 3;
    SolveResult res = chi_p(gen_caterpillar({{3, 3, 3, 3}}).graph, tiny);
    CHECK(res.exhausted);
    CHECK(res.chi >= 4);  // still a valid upper bound
    CHECK(verify_coloring(gen_caterpillar({{3, 3, 3, 3}}).graph, res.witness).empty());
}

TEST_CASE("determinism: identical runs, identical witnesses and node counts") {
    Graph g = gen_caterpillar({{2, 1, 3, 1, 2}}).graph;
    SolveResult a = chi_p(g);
    SolveResult b = chi_p(g);
    CHECK(a.chi == b.chi);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness.colors == b.witness.colors);
}

TEST_CASE("disjoint union law") {
    std::mt19937 rng(99);
    std::vector<Graph> pool;
    for (int n = 1; n <= 6; ++n) pool.push_back(gen_path(n).graph);
    for (int n = 3; n <= 6; ++n) pool.push_back(gen_cycle(n).graph);
    for (int n = 2; n <= 6; ++n) pool.push_back(gen_complete(n).graph);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph& a = pool[rng() % pool.size()];
        const Graph& b = pool[rng() % pool.size()];
        Graph u = disjoint_union(a, b);
        CHECK(chi_p(u).chi == std::max(chi_p(a).chi, chi_p(b).chi));
    }
}

TEST_CASE("deleting a leaf of a tree never increases chi_p") {
    for (const auto& s : enumerate_caterpillars(9)) {
        Graph g = gen_caterpillar(s).graph;
        int chi = chi_p(g).chi;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 1) continue;
            CHECK(chi_p(delete_vertex(g, v).graph).chi <= chi);
        }
    }
}
