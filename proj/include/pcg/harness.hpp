// harness.hpp - claim-verification sweeps: every theorem/proposition under
// test becomes a deterministic pass/fail run over an enumerated instance
// range, with failure witnesses and CSV/JSON reports.

#ifndef PCG_HARNESS_HPP
#define PCG_HARNESS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcg/families.hpp"
#include "pcg/solver.hpp"

namespace pcg {

// Sweep ceilings; the defaults keep the full suite at desk scale.
struct SweepLimits {
    int path_max_n = 12;
    int cycle_max_n = 12;
    int complete_max_n = 8;
    int bipartite_max = 5;      // m <= n <= bipartite_max
    int star_max_leaves = 8;
    int friendship_max_t = 5;
    int caterpillar_max_n = 13;
    int corona_base_max_n = 7;
    int spider_max_legs = 4;
    int spider_max_leg_len = 5;
    int lobster_max_n = 16;
    int lobster_ct_max = 1;
    int workers = 0;  // 0 = hardware concurrency
    SolveBudget budget;
};

struct SweepFailure {
    std::string instance;
    std::string detail;
    Graph graph;  // replayable witness
};

struct SweepReport {
    std::string claim;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // one per instance, fixed schema
    std::vector<SweepFailure> failures;
    std::vector<std::pair<std::string, std::string>> stats;  // ordered extras
    long long instances = 0;
    double wall_seconds = 0;
    bool budget_hit = false;

    bool passed() const { return failures.empty(); }
};

// chi_p == formula_chi (and mu_p == formula_gap where defined) over paths,
// cycles, complete graphs, complete bipartite graphs, stars, friendship
// and windmill graphs; also mu_p <= 1 for paths and cycles.
SweepReport check_closed_forms(const SweepLimits& limits);

// mu_p(T) <= 2 and >= 0 over every canonical caterpillar; mu_p = 2
// witnesses are collected with their structural audit.
SweepReport check_caterpillar_gap(const SweepLimits& limits);

// The committed fixtures: chi_p = k and mu_p = 1 for k = 3..6 exactly,
// the <= 7 pattern certificate for k = 7.
SweepReport check_gap1_examples(const SweepLimits& limits);

// chi_p(T (.) K_1) <= 7, the chi = 3 iff star characterization, mu_p <= 2,
// and validity of the pattern colorer, over all canonical base
// caterpillars.
SweepReport check_corona(const SweepLimits& limits);

// chi_p <= 3 and mu_p in {0,1} for spiders; classifies instances under
// both readings of leg "order" and reports which reading reproduces the
// two-case split (report only).
SweepReport check_spiders(const SweepLimits& limits);

// Exploratory: mu_p over lobsters with c_T <= ct_max; reports the maximum
// found, its witnesses and the distribution. Never fails.
SweepReport search_lobster_gap(const SweepLimits& limits);

// Claim tag -> sweep dispatch ("closed-forms", "caterpillar-gap",
// "gap1-examples", "corona-gap", "spiders", "lobster-search").
std::vector<std::string> sweep_tags();
SweepReport run_sweep(const std::string& tag, const SweepLimits& limits);

// Apply config-file overrides (keys named after SweepLimits fields, plus
// node_limit / time_limit).
void apply_config(SweepLimits& limits, const std::map<std::string, std::string>& config);

std::string report_json(const SweepReport& report);
void report_csv(std::ostream& os, const SweepReport& report);

// <claim>.csv, <claim>.json and one .gr witness per failure, under dir.
void write_report_files(const SweepReport& report, const std::string& dir);

}  // namespace pcg

#endif  // PCG_HARNESS_HPP
