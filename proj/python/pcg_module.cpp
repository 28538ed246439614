// pybind11 bindings for the pcg core: graphs, family generators, the exact
// solver, gap reports, pattern colorings and the verification sweeps.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pcg/gap.hpp"
#include "pcg/harness.hpp"
#include "pcg/io.hpp"
#include "pcg/patterns.hpp"

namespace py = pybind11;
using namespace pcg;

namespace {

SolveBudget make_budget(std::optional<long long> node_limit, std::optional<long long> time_limit_ms) {
    SolveBudget b;
    b.node_limit = node_limit;
    if (time_limit_ms) b.time_limit = std::chrono::milliseconds(*time_limit_ms);
    return b;
}

std::string rule_name(PatternRule rule) {
    switch (rule) {
        case PatternRule::path_1213: return "path_1213";
        case PatternRule::spider: return "spider";
        case PatternRule::corona_spine_12: return "corona_spine_12";
        case PatternRule::caterpillar_via_corona: return "caterpillar_via_corona";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_pcg, m) {
    m.doc() = "packing chromatic number and packing coloring gap toolkit";

    m.attr("UNREACHABLE") = kUnreachable;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("distances", [](const Graph& g) {
        DistanceMatrix d = distance_matrix(g);
        std::vector<std::vector<int>> out(g.order(), std::vector<int>(g.order()));
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) out[u][v] = d(u, v);
        return out;
    }, py::arg("graph"), "All-pairs BFS distances; UNREACHABLE across components.");

    m.def("delete_vertex", [](const Graph& g, int v) {
        VertexDeletion d = delete_vertex(g, v);
        return py::make_tuple(d.graph, d.old_to_new);
    }, py::arg("graph"), py::arg("v"));

    m.def("components", [](const Graph& g) {
        std::vector<std::pair<Graph, std::vector<int>>> out;
        for (auto& c : components(g)) out.emplace_back(c.graph, c.orig);
        return out;
    }, py::arg("graph"));

    m.def("diameter", &diameter, py::arg("graph"));
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("is_star", &is_star, py::arg("graph"));
    m.def("is_tree", &is_tree, py::arg("graph"));
    m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));
    m.def("tree_certificate", &tree_certificate, py::arg("graph"));

    py::class_<FamilyInstance>(m, "FamilyInstance")
        .def_property_readonly("family",
                               [](const FamilyInstance& f) { return family_name(f.family); })
        .def_readonly("params", &FamilyInstance::params)
        .def_readonly("graph", &FamilyInstance::graph)
        .def_readonly("spine", &FamilyInstance::spine)
        .def_readonly("canonical", &FamilyInstance::canonical)
        .def("__repr__", [](const FamilyInstance& f) { return f.describe(); });

    m.def("gen_path", &gen_path, py::arg("n"));
    m.def("gen_cycle", &gen_cycle, py::arg("n"));
    m.def("gen_complete", &gen_complete, py::arg("n"));
    m.def("gen_complete_bipartite", &gen_complete_bipartite, py::arg("m"), py::arg("n"));
    m.def("gen_star", &gen_star, py::arg("leaves"));
    m.def("gen_spider", [](const std::vector<int>& legs) { return gen_spider(SpiderSpec{legs}); },
          py::arg("leg_lengths"));
    m.def("gen_caterpillar",
          [](const std::vector<int>& leaves) { return gen_caterpillar(CaterpillarSpec{leaves}); },
          py::arg("leaf_counts"));
    m.def("gen_lobster",
          [](const std::vector<std::vector<int>>& branches) {
              return gen_lobster(LobsterSpec{branches});
          },
          py::arg("branches"));
    m.def("gen_friendship", &gen_friendship, py::arg("t"));
    m.def("gen_windmill", &gen_windmill, py::arg("m"), py::arg("t"));
    m.def("corona_k1", &corona_k1, py::arg("base"));
    m.def("compute_ct", &compute_ct, py::arg("instance"));
    m.def("formula_chi", &formula_chi, py::arg("instance"));
    m.def("formula_gap", &formula_gap, py::arg("instance"));

    m.def("enumerate_caterpillars", [](int max_n) {
        std::vector<std::vector<int>> out;
        for (auto& s : enumerate_caterpillars(max_n)) out.push_back(s.leaf_counts);
        return out;
    }, py::arg("max_n"));
    m.def("enumerate_spiders", [](int max_legs, int max_leg_len) {
        std::vector<std::vector<int>> out;
        for (auto& s : enumerate_spiders(max_legs, max_leg_len)) out.push_back(s.leg_lengths);
        return out;
    }, py::arg("max_legs"), py::arg("max_leg_len"));
    m.def("enumerate_lobsters", [](int max_n, int ct_max) {
        std::vector<std::vector<std::vector<int>>> out;
        for (auto& s : enumerate_lobsters(max_n, ct_max)) out.push_back(s.branches);
        return out;
    }, py::arg("max_n"), py::arg("ct_max"));

    py::class_<PackingColoring>(m, "PackingColoring")
        .def(py::init([](std::vector<int> colors) { return PackingColoring{std::move(colors)}; }),
             py::arg("colors"))
        .def_readonly("colors", &PackingColoring::colors)
        .def_property_readonly("max_color", &PackingColoring::max_color);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("chi", &SolveResult::chi)
        .def_readonly("witness", &SolveResult::witness)
        .def_readonly("exhausted", &SolveResult::exhausted)
        .def_readonly("nodes", &SolveResult::nodes)
        .def("__repr__", [](const SolveResult& r) {
            return "SolveResult(chi=" + std::to_string(r.chi) +
                   (r.exhausted ? ", upper bound only)" : ")");
        });

    m.def("verify_coloring", [](const Graph& g, const std::vector<int>& colors) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (auto& v : verify_coloring(g, PackingColoring{colors}))
            out.emplace_back(v.u, v.v, v.color, v.distance);
        return out;
    }, py::arg("graph"), py::arg("colors"),
       "Violated pairs (u, v, color, distance); empty means valid.");

    m.def("chi_p", [](const Graph& g, std::optional<long long> node_limit,
                      std::optional<long long> time_limit_ms) {
        return chi_p(g, make_budget(node_limit, time_limit_ms));
    }, py::arg("graph"), py::arg("node_limit") = std::nullopt,
       py::arg("time_limit_ms") = std::nullopt);

    m.def("greedy_upper_bound", &greedy_upper_bound, py::arg("graph"));
    m.def("lower_bound", &lower_bound, py::arg("graph"));
    m.def("brute_force_chi", &brute_force_chi, py::arg("graph"));
    m.def("decide_k", [](const Graph& g, int k, std::optional<long long> node_limit,
                         std::optional<long long> time_limit_ms) {
        DecideResult r = decide_k(g, k, make_budget(node_limit, time_limit_ms));
        const char* status = r.status == DecideStatus::feasible     ? "feasible"
                             : r.status == DecideStatus::infeasible ? "infeasible"
                                                                    : "exhausted";
        return py::make_tuple(status, r.witness.colors, r.nodes);
    }, py::arg("graph"), py::arg("k"), py::arg("node_limit") = std::nullopt,
       py::arg("time_limit_ms") = std::nullopt);

    py::class_<GapReport>(m, "GapReport")
        .def_readonly("chi", &GapReport::chi)
        .def_readonly("exact", &GapReport::exact)
        .def_readonly("vertices", &GapReport::vertices)
        .def_readonly("chi_minus", &GapReport::chi_minus)
        .def_readonly("deltas", &GapReport::deltas)
        .def_readonly("mu", &GapReport::mu)
        .def_readonly("delta_set", &GapReport::delta_set)
        .def_readonly("argmax", &GapReport::argmax)
        .def_readonly("critical", &GapReport::critical)
        .def("__repr__", [](const GapReport& r) {
            return "GapReport(chi=" + std::to_string(r.chi) + ", mu=" + std::to_string(r.mu) + ")";
        });

    m.def("gap_report", [](const Graph& g, std::optional<long long> node_limit,
                           std::optional<long long> time_limit_ms, const std::string& scope,
                           const std::vector<int>& spine) {
        GapScope s = scope == "all"        ? GapScope::all
                     : scope == "spine"    ? GapScope::spine
                     : scope == "non_leaf" ? GapScope::non_leaf
                                           : throw std::invalid_argument("scope must be all, spine or non_leaf");
        return gap_report(g, make_budget(node_limit, time_limit_ms), s, spine);
    }, py::arg("graph"), py::arg("node_limit") = std::nullopt,
       py::arg("time_limit_ms") = std::nullopt, py::arg("scope") = "all",
       py::arg("spine") = std::vector<int>{});

    m.def("mu_p", [](const Graph& g) { return mu_p(g); }, py::arg("graph"));
    m.def("is_vertex_critical", [](const Graph& g) { return is_vertex_critical(g); },
          py::arg("graph"));

    py::class_<PatternColoring>(m, "PatternColoring")
        .def_readonly("coloring", &PatternColoring::coloring)
        .def_readonly("claimed_max", &PatternColoring::claimed_max)
        .def_property_readonly("rule",
                               [](const PatternColoring& p) { return rule_name(p.rule); });

    m.def("color_path_pattern", &color_path_pattern, py::arg("n"));
    m.def("color_spider", [](const std::vector<int>& legs) {
        return color_spider(SpiderSpec{legs});
    }, py::arg("leg_lengths"));
    m.def("color_corona_caterpillar", &color_corona_caterpillar, py::arg("instance"));
    m.def("color_caterpillar_via_corona", [](const std::vector<int>& leaves) {
        return color_caterpillar_via_corona(CaterpillarSpec{leaves});
    }, py::arg("leaf_counts"));

    py::class_<Gap1Fixture>(m, "Gap1Fixture")
        .def_readonly("k", &Gap1Fixture::k)
        .def_readonly("instance", &Gap1Fixture::instance)
        .def_readonly("claimed_chi", &Gap1Fixture::claimed_chi)
        .def_readonly("claimed_gap", &Gap1Fixture::claimed_gap)
        .def_readonly("critical_spine", &Gap1Fixture::critical_spine)
        .def_readonly("chi_exactly_verifiable", &Gap1Fixture::chi_exactly_verifiable);
    m.def("gap1_fixture", &gap1_fixture, py::arg("k"));

    py::class_<SweepLimits>(m, "SweepLimits")
        .def(py::init<>())
        .def_readwrite("path_max_n", &SweepLimits::path_max_n)
        .def_readwrite("cycle_max_n", &SweepLimits::cycle_max_n)
        .def_readwrite("complete_max_n", &SweepLimits::complete_max_n)
        .def_readwrite("bipartite_max", &SweepLimits::bipartite_max)
        .def_readwrite("star_max_leaves", &SweepLimits::star_max_leaves)
        .def_readwrite("friendship_max_t", &SweepLimits::friendship_max_t)
        .def_readwrite("caterpillar_max_n", &SweepLimits::caterpillar_max_n)
        .def_readwrite("corona_base_max_n", &SweepLimits::corona_base_max_n)
        .def_readwrite("spider_max_legs", &SweepLimits::spider_max_legs)
        .def_readwrite("spider_max_leg_len", &SweepLimits::spider_max_leg_len)
        .def_readwrite("lobster_max_n", &SweepLimits::lobster_max_n)
        .def_readwrite("lobster_ct_max", &SweepLimits::lobster_ct_max)
        .def_readwrite("workers", &SweepLimits::workers);

    py::class_<SweepReport>(m, "SweepReport")
        .def_property_readonly("passed", &SweepReport::passed)
        .def_readonly("claim", &SweepReport::claim)
        .def_readonly("instances", &SweepReport::instances)
        .def_readonly("columns", &SweepReport::columns)
        .def_readonly("rows", &SweepReport::rows)
        .def_property_readonly("stats", [](const SweepReport& r) {
            py::dict d;
            for (auto& [k, v] : r.stats) d[py::str(k)] = v;
            return d;
        })
        .def_property_readonly("failures", [](const SweepReport& r) {
            std::vector<std::pair<std::string, std::string>> out;
            for (auto& f : r.failures) out.emplace_back(f.instance, f.detail);
            return out;
        })
        .def("json", &report_json)
        .def("__repr__", [](const SweepReport& r) {
            return "SweepReport(" + r.claim + ", " + (r.passed() ? "PASS" : "FAIL") + ")";
        });

    m.def("sweep_tags", &sweep_tags);
    m.def("run_sweep", &run_sweep, py::arg("tag"), py::arg("limits") = SweepLimits{});

    m.def("read_graph", [](const std::string& text) {
        std::istringstream is(text);
        return read_graph(is);
    }, py::arg("text"), "Parse a graph file from its text.");
    m.def("write_graph", [](const Graph& g) {
        std::ostringstream os;
        write_graph(os, g);
        return os.str();
    }, py::arg("graph"), "Serialize a graph to file text.");
}
