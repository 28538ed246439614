// pcg - packing chromatic number / packing coloring gap toolkit.
//
// Subcommands: chi, gap, gen, verify, sweep, fixtures.
// Exit codes: 0 success/pass, 1 usage or input error, 2 claim failure or
// invalid coloring, 3 budget-truncated result.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcg/gap.hpp"
#include "pcg/harness.hpp"
#include "pcg/io.hpp"
#include "pcg/patterns.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitClaimFailed = 2;
constexpr int kExitTruncated = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw pcg::ParseError("bad integer list: " + text);
        }
    }
    return out;
}

std::vector<std::vector<int>> parse_branches(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ';')) out.push_back(parse_int_list(item));
    if (out.empty()) out.push_back({});
    return out;
}

// Options shared by every command that can generate an instance.
struct GenSpec {
    std::vector<std::string> args;  // family name + numeric params
    std::string leaves;
    std::string legs;
    std::string branches;
    std::string base;

    bool used() const { return !args.empty(); }
};

void add_gen_options(CLI::App* cmd, GenSpec& spec, bool positional) {
    if (positional) {
        cmd->add_option("family", spec.args, "family name followed by numeric parameters")
            ->required()
            ->expected(-1);
    } else {
        cmd->add_option("--gen", spec.args, "generate: family name followed by numeric parameters")
            ->expected(-1);
    }
    cmd->add_option("--leaves", spec.leaves, "caterpillar leaf counts, e.g. 2,0,3");
    cmd->add_option("--legs", spec.legs, "spider leg lengths, e.g. 2,2,2");
    cmd->add_option("--branches", spec.branches,
                    "lobster branches per spine vertex, e.g. '0,2;;1'");
    cmd->add_option("--base", spec.base, "base family for corona");
}

pcg::FamilyInstance build_instance(const GenSpec& spec) {
    using namespace pcg;
    if (spec.args.empty()) throw ParseError("no generator given");
    const std::string& name = spec.args.front();
    std::vector<int> params;
    for (size_t i = 1; i < spec.args.size(); ++i) {
        try {
            params.push_back(std::stoi(spec.args[i]));
        } catch (const std::exception&) {
            throw ParseError("bad numeric parameter: " + spec.args[i]);
        }
    }
    auto need = [&](size_t count, const std::string& what) {
        if (params.size() != count)
            throw ParseError(name + " needs " + what);
    };
    if (name == "gap1") {
        need(1, "one parameter k in 3..7");
        return gap1_fixture(params[0]).instance;
    }
    if (name == "corona") {
        GenSpec base = spec;
        base.args.assign(1, spec.base.empty() ? "caterpillar" : spec.base);
        for (size_t i = 1; i < spec.args.size(); ++i) base.args.push_back(spec.args[i]);
        base.base.clear();
        return corona_k1(build_instance(base));
    }
    auto family = family_from_name(name);
    if (!family) throw ParseError("unknown family: " + name);
    switch (*family) {
        case Family::path: need(1, "one parameter n"); return gen_path(params[0]);
        case Family::cycle: need(1, "one parameter n"); return gen_cycle(params[0]);
        case Family::complete: need(1, "one parameter n"); return gen_complete(params[0]);
        case Family::complete_bipartite:
            need(2, "two parameters m n");
            return gen_complete_bipartite(params[0], params[1]);
        case Family::star: need(1, "one parameter: leaf count"); return gen_star(params[0]);
        case Family::friendship: need(1, "one parameter t"); return gen_friendship(params[0]);
        case Family::windmill: need(2, "two parameters m t"); return gen_windmill(params[0], params[1]);
        case Family::spider:
            if (spec.legs.empty()) throw ParseError("spider needs --legs");
            return gen_spider(SpiderSpec{parse_int_list(spec.legs)});
        case Family::caterpillar:
            if (spec.leaves.empty()) throw ParseError("caterpillar needs --leaves");
            return gen_caterpillar(CaterpillarSpec{parse_int_list(spec.leaves)});
        case Family::lobster:
            if (spec.branches.empty()) throw ParseError("lobster needs --branches");
            return gen_lobster(LobsterSpec{parse_branches(spec.branches)});
        case Family::corona:
            break;  // handled above
    }
    throw ParseError("unknown family: " + name);
}

struct InputSpec {
    std::string input_file;
    GenSpec gen;
};

// Graph plus optional structural metadata (spine, when generated).
struct LoadedGraph {
    pcg::Graph graph;
    std::optional<pcg::FamilyInstance> instance;
};

LoadedGraph load_graph(const InputSpec& in) {
    if (!in.input_file.empty() && in.gen.used())
        throw pcg::ParseError("use either --input or --gen, not both");
    if (!in.input_file.empty()) return {pcg::read_graph_file(in.input_file), std::nullopt};
    if (in.gen.used()) {
        pcg::FamilyInstance inst = build_instance(in.gen);
        return {inst.graph, std::move(inst)};
    }
    throw pcg::ParseError("no input: give --input FILE or --gen FAMILY ...");
}

struct BudgetFlags {
    std::string node_limit;
    std::string time_limit;

    pcg::SolveBudget to_budget() const {
        pcg::SolveBudget b;
        if (!node_limit.empty()) b.node_limit = std::stoll(node_limit);
        if (!time_limit.empty()) b.time_limit = pcg::parse_duration(time_limit);
        return b;
    }
};

void add_budget_options(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--node-limit", flags.node_limit, "search node limit");
    cmd->add_option("--time-limit", flags.time_limit, "wall clock limit (e.g. 10s, 5m)");
}

int cmd_chi(const InputSpec& in, const BudgetFlags& budget, const std::string& witness_file,
            bool json) {
    LoadedGraph loaded = load_graph(in);
    pcg::SolveResult res = pcg::chi_p(loaded.graph, budget.to_budget());
    if (json) {
        nlohmann::json j;
        j["chi"] = res.chi;
        j["exact"] = !res.exhausted;
        j["nodes"] = res.nodes;
        j["colors"] = res.witness.colors;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi_p = " << res.chi << (res.exhausted ? " (upper bound, budget exhausted)" : "")
                  << "\n";
        std::cout << "nodes = " << res.nodes << "\n";
    }
    if (!witness_file.empty()) {
        std::ofstream os(witness_file);
        if (!os) throw pcg::ParseError("cannot write witness file: " + witness_file);
        pcg::write_coloring(os, res.witness);
    }
    return res.exhausted ? kExitTruncated : kExitOk;
}

int cmd_gap(const InputSpec& in, const BudgetFlags& budget, bool per_vertex, bool spine_only,
            bool json) {
    LoadedGraph loaded = load_graph(in);
    pcg::GapScope scope = pcg::GapScope::all;
    std::vector<int> spine;
    if (spine_only) {
        if (!loaded.instance || loaded.instance->spine.empty())
            throw pcg::ParseError("--spine-only needs a generated instance with a spine");
        scope = pcg::GapScope::spine;
        spine = loaded.instance->spine;
    }
    pcg::GapReport rep = pcg::gap_report(loaded.graph, budget.to_budget(), scope, spine);
    if (json) {
        nlohmann::json j;
        j["chi"] = rep.chi;
        j["mu"] = rep.mu;
        j["exact"] = rep.exact;
        j["delta_set"] = rep.delta_set;
        nlohmann::json argmax = nlohmann::json::array();
        for (int v : rep.argmax) argmax.push_back(v + 1);
        j["argmax"] = argmax;
        if (rep.critical) j["critical"] = *rep.critical;
        nlohmann::json table = nlohmann::json::array();
        for (size_t i = 0; i < rep.vertices.size(); ++i)
            table.push_back({{"vertex", rep.vertices[i] + 1},
                             {"chi_minus", rep.chi_minus[i]},
                             {"delta", rep.deltas[i]}});
        j["per_vertex"] = table;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi_p = " << rep.chi << "\n";
        std::cout << "mu_p " << (rep.exact ? "= " : ">= (budget exhausted) ") << rep.mu << "\n";
        if (rep.critical) std::cout << "critical = " << (*rep.critical ? "yes" : "no") << "\n";
        if (per_vertex) {
            std::cout << "vertex chi_minus delta\n";
            for (size_t i = 0; i < rep.vertices.size(); ++i)
                std::cout << rep.vertices[i] + 1 << " " << rep.chi_minus[i] << " " << rep.deltas[i]
                          << "\n";
        }
    }
    return rep.exact ? kExitOk : kExitTruncated;
}

int cmd_gen(const GenSpec& spec, const std::string& out_file) {
    pcg::FamilyInstance inst = build_instance(spec);
    if (out_file.empty()) {
        pcg::write_graph(std::cout, inst.graph);
        return kExitOk;
    }
    std::ofstream os(out_file);
    if (!os) throw pcg::ParseError("cannot write: " + out_file);
    pcg::write_graph(os, inst.graph);
    std::string meta_file = out_file + ".json";
    if (out_file.size() > 3 && out_file.substr(out_file.size() - 3) == ".gr")
        meta_file = out_file.substr(0, out_file.size() - 3) + ".json";
    std::ofstream meta(meta_file);
    meta << pcg::instance_metadata_json(inst);
    std::cout << "wrote " << out_file << " (n=" << inst.graph.order()
              << ", m=" << inst.graph.size() << ") and " << meta_file << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file) {
    pcg::Graph g = pcg::read_graph_file(graph_file);
    pcg::PackingColoring c = pcg::read_coloring_file(coloring_file, g.order());
    auto violations = pcg::verify_coloring(g, c);
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& v : violations)
        std::cout << "violation: (" << v.u + 1 << ", " << v.v + 1 << ", " << v.color << ", "
                  << v.distance << ")\n";
    return kExitClaimFailed;
}

int cmd_sweep(const std::string& tag, pcg::SweepLimits limits, const std::string& out_dir,
              bool json) {
    pcg::SweepReport rep = pcg::run_sweep(tag, limits);
    if (json) {
        std::cout << pcg::report_json(rep);
    } else {
        std::cout << rep.claim << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
                  << rep.instances << " instances, " << rep.failures.size() << " failures, "
                  << rep.wall_seconds << "s)\n";
        for (const auto& f : rep.failures)
            std::cout << "  FAIL " << f.instance << ": " << f.detail << "\n";
        for (const auto& [k, v] : rep.stats) std::cout << "  " << k << " = " << v << "\n";
    }
    if (!out_dir.empty()) pcg::write_report_files(rep, out_dir);
    if (!rep.passed()) return kExitClaimFailed;
    if (rep.budget_hit) return kExitTruncated;
    return kExitOk;
}

int cmd_fixtures(const std::string& out_dir, bool search) {
    namespace fs = std::filesystem;
    if (search) {
        for (int k = 3; k <= 6; ++k) {
            int found = pcg::gap1_fixture_min_count(k);
            int committed = pcg::gap1_fixture(k).spec.leaf_counts.front();
            std::cout << "k=" << k << ": minimal bundle count " << found << ", committed "
                      << committed << (found == committed ? " (match)" : " (MISMATCH)") << "\n";
            if (found != committed) return kExitClaimFailed;
        }
    }
    fs::create_directories(out_dir);
    for (const auto& fx : pcg::gap1_fixtures()) {
        std::string stem = "gap1_k" + std::to_string(fx.k);
        {
            std::ofstream os(fs::path(out_dir) / (stem + ".gr"));
            os << "c gap-1 caterpillar fixture, k = " << fx.k << "\n";
            pcg::write_graph(os, fx.instance.graph);
        }
        nlohmann::json j;
        j["k"] = fx.k;
        j["leaf_counts"] = fx.spec.leaf_counts;
        j["claimed_chi"] = fx.claimed_chi;
        j["claimed_gap"] = fx.claimed_gap;
        j["chi_exactly_verifiable"] = fx.chi_exactly_verifiable;
        std::vector<int> critical;
        for (int pos : fx.critical_spine) critical.push_back(fx.instance.spine[pos] + 1);
        j["critical_vertices"] = critical;
        std::ofstream meta(fs::path(out_dir) / (stem + ".json"));
        meta << j.dump(2) << "\n";
        std::cout << "wrote " << stem << ".gr (n=" << fx.instance.graph.order() << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing chromatic number and packing coloring gap toolkit"};
    app.require_subcommand(1);

    // chi
    auto* chi = app.add_subcommand("chi", "exact packing chromatic number");
    InputSpec chi_in;
    BudgetFlags chi_budget;
    std::string chi_witness;
    bool chi_json = false;
    chi->add_option("--input", chi_in.input_file, "graph file");
    add_gen_options(chi, chi_in.gen, false);
    add_budget_options(chi, chi_budget);
    chi->add_option("--witness", chi_witness, "write the optimal coloring to this file");
    chi->add_flag("--json", chi_json, "machine-readable output");

    // gap
    auto* gap = app.add_subcommand("gap", "packing coloring gap mu_p");
    InputSpec gap_in;
    BudgetFlags gap_budget;
    bool gap_per_vertex = false, gap_spine_only = false, gap_json = false;
    gap->add_option("--input", gap_in.input_file, "graph file");
    add_gen_options(gap, gap_in.gen, false);
    add_budget_options(gap, gap_budget);
    gap->add_flag("--per-vertex", gap_per_vertex, "print the per-vertex deletion table");
    gap->add_flag("--spine-only", gap_spine_only, "delete spine vertices only");
    gap->add_flag("--json", gap_json, "machine-readable output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    GenSpec gen_spec;
    std::string gen_out;
    add_gen_options(gen, gen_spec, true);
    gen->add_option("--out", gen_out, "output graph file (metadata goes to .json)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring file");
    std::string verify_graph, verify_coloring_file;
    verify->add_option("--graph", verify_graph, "graph file")->required();
    verify->add_option("--coloring", verify_coloring_file, "coloring file")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a claim-verification sweep");
    std::string sweep_tag, sweep_out, sweep_config;
    pcg::SweepLimits limits;
    BudgetFlags sweep_budget;
    bool sweep_json = false;
    int sweep_max_n = -1, sweep_ct_max = -1;
    std::string tags_help;
    for (const auto& t : pcg::sweep_tags()) tags_help += t + " ";
    sweep->add_option("claim", sweep_tag, "claim tag: " + tags_help)->required();
    sweep->add_option("--config", sweep_config, "key=value sweep configuration file");
    sweep->add_option("--max-n", sweep_max_n, "override the sweep's main size ceiling");
    sweep->add_option("--ct-max", sweep_ct_max, "lobster c_T ceiling");
    sweep->add_option("--workers", limits.workers, "parallel workers (0 = hardware)");
    sweep->add_option("--out", sweep_out, "write CSV/JSON report and failure witnesses here");
    add_budget_options(sweep, sweep_budget);
    sweep->add_flag("--json", sweep_json, "print the JSON report");

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "write the committed gap-1 fixture caterpillars");
    std::string fixtures_out = "data/fixtures";
    bool fixtures_search = false;
    fixtures->add_option("--out", fixtures_out, "output directory");
    fixtures->add_flag("--search", fixtures_search,
                       "re-derive minimal bundle counts and compare with committed values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chi->parsed()) return cmd_chi(chi_in, chi_budget, chi_witness, chi_json);
        if (gap->parsed())
            return cmd_gap(gap_in, gap_budget, gap_per_vertex, gap_spine_only, gap_json);
        if (gen->parsed()) return cmd_gen(gen_spec, gen_out);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_coloring_file);
        if (sweep->parsed()) {
            if (!sweep_config.empty())
                pcg::apply_config(limits, pcg::read_config_file(sweep_config));
            if (sweep_max_n >= 0) {
                limits.caterpillar_max_n = sweep_max_n;
                limits.corona_base_max_n = sweep_max_n;
                limits.lobster_max_n = sweep_max_n;
            }
            if (sweep_ct_max >= 0) limits.lobster_ct_max = sweep_ct_max;
            pcg::SolveBudget b = sweep_budget.to_budget();
            if (b.node_limit) limits.budget.node_limit = b.node_limit;
            if (b.time_limit) limits.budget.time_limit = b.time_limit;
            return cmd_sweep(sweep_tag, limits, sweep_out, sweep_json);
        }
        if (fixtures->parsed()) return cmd_fixtures(fixtures_out, fixtures_search);
    } catch (const pcg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
