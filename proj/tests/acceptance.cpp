// acceptance.cpp - the acceptance suite: every criterion prints one
// PASS/FAIL line; the binary exits nonzero if any criterion fails.
//
// Reports and witness files land in ./acceptance_out.

#include <cstdio>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pcg/gap.hpp"
#include "pcg/harness.hpp"
#include "pcg/io.hpp"
#include "pcg/patterns.hpp"

using namespace pcg;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail = "") {
    std::printf("%s  %2d. %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

// Every family instance with n <= max_n, connected ones only.
std::vector<FamilyInstance> family_pool(int max_n) {
    std::vector<FamilyInstance> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(gen_path(n));
    for (int n = 3; n <= max_n; ++n) out.push_back(gen_cycle(n));
    for (int n = 1; n <= max_n; ++n) out.push_back(gen_complete(n));
    for (int m = 1; m <= max_n; ++m)
        for (int n = m; m + n <= max_n; ++n) out.push_back(gen_complete_bipartite(m, n));
    for (int k = 0; k + 1 <= max_n; ++k) out.push_back(gen_star(k));
    for (const auto& s : enumerate_spiders(max_n - 1, max_n - 1))
        if (s.order() <= max_n) out.push_back(gen_spider(s));
    for (const auto& s : enumerate_caterpillars(max_n)) out.push_back(gen_caterpillar(s));
    for (const auto& s : enumerate_lobsters(max_n, max_n))
        out.push_back(gen_lobster(s));
    for (const auto& s : enumerate_caterpillars(max_n / 2))
        out.push_back(corona_k1(gen_caterpillar(s)));
    for (int t = 1; 2 * t + 1 <= max_n; ++t) out.push_back(gen_friendship(t));
    for (int m = 3; m <= max_n; ++m)
        for (int t = 2; t * (m - 1) + 1 <= max_n; ++t) out.push_back(gen_windmill(m, t));
    return out;
}

bool criterion1_oracle_equivalence() {
    long long checked = 0;
    for (const auto& inst : family_pool(9)) {
        if (!is_connected(inst.graph)) continue;
        if (chi_p(inst.graph).chi != brute_force_chi(inst.graph)) {
            report(1, "oracle equivalence", false, "mismatch on " + inst.describe());
            return false;
        }
        ++checked;
    }
    // seeded random connected graphs stretch the same check into the
    // thousands
    std::mt19937 rng(20250801);
    std::bernoulli_distribution coin(0.35);
    long long random_checked = 0;
    while (random_checked < 3000) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        ++random_checked;
        if (chi_p(g).chi != brute_force_chi(g)) {
            report(1, "oracle equivalence", false, "mismatch on a random graph");
            return false;
        }
    }
    report(1, "oracle equivalence chi_p == brute_force_chi (n <= 9)", true,
           std::to_string(checked) + " family + " + std::to_string(random_checked) +
               " random instances");
    return true;
}

bool criterion2_closed_forms() {
    for (int n = 1; n <= 12; ++n)
        if (chi_p(gen_path(n).graph).chi != *formula_chi(gen_path(n)))
            return report(2, "closed forms", false, "path " + std::to_string(n)), false;
    for (int n = 3; n <= 12; ++n)
        if (chi_p(gen_cycle(n).graph).chi != *formula_chi(gen_cycle(n)))
            return report(2, "closed forms", false, "cycle " + std::to_string(n)), false;
    for (int n = 1; n <= 8; ++n)
        if (chi_p(gen_complete(n).graph).chi != n)
            return report(2, "closed forms", false, "K_" + std::to_string(n)), false;
    for (int m = 1; m <= 5; ++m)
        for (int n = m; n <= 5; ++n)
            if (chi_p(gen_complete_bipartite(m, n).graph).chi != 1 + m)
                return report(2, "closed forms", false, "K_{m,n}"), false;
    for (int k = 1; k <= 8; ++k)
        if (chi_p(gen_star(k).graph).chi != 2)
            return report(2, "closed forms", false, "star"), false;
    report(2, "closed forms: paths, cycles, K_n, K_{m,n}, stars", true);
    return true;
}

bool criterion3_path_cycle_gap() {
    for (int n = 1; n <= 12; ++n)
        if (mu_p(gen_path(n).graph) > 1)
            return report(3, "mu_p(P_n) <= 1", false, "n=" + std::to_string(n)), false;
    for (int n = 3; n <= 12; ++n)
        if (mu_p(gen_cycle(n).graph) > 1)
            return report(3, "mu_p(C_n) <= 1", false, "n=" + std::to_string(n)), false;
    report(3, "mu_p <= 1 for paths and cycles (n <= 12)", true);
    return true;
}

bool criterion4_exact_gaps() {
    for (int n = 2; n <= 8; ++n)
        if (mu_p(gen_complete(n).graph) != 1)
            return report(4, "mu_p(K_n) = 1", false, "n=" + std::to_string(n)), false;
    for (int t = 1; t <= 5; ++t) {
        FamilyInstance f = gen_friendship(t);
        if (chi_p(f.graph).chi != t + 2 || mu_p(f.graph) != t)
            return report(4, "friendship chi/mu", false, "t=" + std::to_string(t)), false;
    }
    for (auto [m, t] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
        FamilyInstance w = gen_windmill(m, t);
        if (chi_p(w.graph).chi != t * (m - 2) + 2 || mu_p(w.graph) != t * (m - 2) - m + 3)
            return report(4, "windmill chi/mu", false,
                          "(m,t)=(" + std::to_string(m) + "," + std::to_string(t) + ")"),
                   false;
    }
    report(4, "exact gaps: K_n, friendship, windmill formulas", true);
    return true;
}

bool criterion5_diameter2_law() {
    long long checked = 0;
    for (const auto& inst : family_pool(10)) {
        const Graph& g = inst.graph;
        if (g.order() > 10 || !is_connected(g)) continue;
        if (diameter(g) > 2) continue;
        int alpha = oracles::independence_by_subsets(g);
        if (chi_p(g).chi != g.order() - alpha + 1) {
            report(5, "diameter-2 law", false, inst.describe());
            return false;
        }
        ++checked;
    }
    report(5, "diameter <= 2 implies chi_p = n - alpha + 1 (n <= 10)", true,
           std::to_string(checked) + " instances");
    return true;
}

bool criterion6_caterpillar_theorem() {
    SweepLimits lim;
    lim.caterpillar_max_n = 13;
    SweepReport rep = check_caterpillar_gap(lim);
    write_report_files(rep, "acceptance_out");
    long long mu2 = 0;
    for (const auto& [k, v] : rep.stats)
        if (k == "mu2_witnesses") mu2 = std::stoll(v);
    bool pass = rep.passed() && mu2 >= 1;
    report(6, "mu_p(T) <= 2 for all caterpillars n <= 13", pass,
           std::to_string(rep.instances) + " caterpillars, " + std::to_string(mu2) +
               " mu=2 witnesses persisted");
    return pass;
}

bool criterion7_gap1_fixtures() {
    SweepLimits lim;
    SweepReport rep = check_gap1_examples(lim);
    write_report_files(rep, "acceptance_out");
    std::string detail;
    for (const auto& f : rep.failures) detail += f.instance + " ";
    report(7, "gap-1 fixtures: chi=k, mu=1 for k=3..6; k=7 pattern <= 7", rep.passed(), detail);
    return rep.passed();
}

bool criterion8_corona() {
    SweepLimits lim;
    lim.corona_base_max_n = 7;
    SweepReport rep = check_corona(lim);
    write_report_files(rep, "acceptance_out");
    report(8, "corona: chi <= 7, chi=3 iff star, mu <= 2 (bases n <= 7)", rep.passed(),
           std::to_string(rep.instances) + " bases");
    return rep.passed();
}

bool criterion9_pattern_certificates() {
    for (int n = 1; n <= 1000; ++n) {
        PatternColoring p = color_path_pattern(n);
        Graph g = gen_path(n).graph;
        if (!verify_coloring(g, p.coloring).empty() ||
            p.coloring.max_color() != *formula_chi(gen_path(n))) {
            report(9, "pattern certificates", false, "path n=" + std::to_string(n));
            return false;
        }
    }
    for (const auto& s : enumerate_spiders(6, 10)) {
        PatternColoring p = color_spider(s);
        if (p.coloring.max_color() > 3 ||
            !verify_coloring(gen_spider(s).graph, p.coloring).empty()) {
            report(9, "pattern certificates", false, "spider " + s.to_string());
            return false;
        }
    }
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 100; ++trial) {
        int spine = 1 + static_cast<int>(rng() % 300);
        std::vector<int> leaves(spine);
        for (int& x : leaves) x = static_cast<int>(rng() % 5);
        if (spine >= 2) {
            leaves.front() = std::max(leaves.front(), 1);
            leaves.back() = std::max(leaves.back(), 1);
        }
        FamilyInstance cor = corona_k1(gen_caterpillar({leaves}));
        PatternColoring p = color_corona_caterpillar(cor);
        if (p.coloring.max_color() > 7 || !verify_coloring(cor.graph, p.coloring).empty()) {
            report(9, "pattern certificates", false, "corona trial " + std::to_string(trial));
            return false;
        }
    }
    report(9, "pattern certificates: paths n <= 1000, spiders 6x10, 100 coronas", true);
    return true;
}

bool criterion10_spiders() {
    SweepLimits lim;
    lim.spider_max_legs = 4;
    lim.spider_max_leg_len = 5;
    SweepReport rep = check_spiders(lim);
    write_report_files(rep, "acceptance_out");
    std::string which;
    for (const auto& [k, v] : rep.stats)
        if (k == "matching_reading_on_canonical") which = v;
    report(10, "spiders: chi <= 3, mu in {0,1}; leg-order reading classified", rep.passed(),
           "matching reading: " + which);
    return rep.passed();
}

bool criterion11_lemmas() {
    for (const auto& inst : family_pool(9)) {
        GapReport rep = gap_report(inst.graph);
        if (rep.mu < 0 || (inst.graph.order() >= 2 && rep.mu > rep.chi - 1)) {
            report(11, "gap lemmas", false, inst.describe());
            return false;
        }
    }
    for (const auto& s : enumerate_caterpillars(12)) {
        Graph g = gen_caterpillar(s).graph;
        GapReport rep = gap_report(g);
        if (rep.mu < 0 || (g.order() >= 2 && rep.mu > rep.chi - 1)) {
            report(11, "gap lemmas", false, "caterpillar " + s.to_string());
            return false;
        }
    }
    std::mt19937 rng(86420);
    std::vector<Graph> pool;
    for (const auto& inst : family_pool(9))
        if (is_connected(inst.graph) && inst.graph.order() >= 1) pool.push_back(inst.graph);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph& a = pool[rng() % pool.size()];
        const Graph& b = pool[rng() % pool.size()];
        Graph u = disjoint_union(a, b);
        if (chi_p(u).chi != std::max(chi_p(a).chi, chi_p(b).chi)) {
            report(11, "gap lemmas", false, "disjoint union law");
            return false;
        }
    }
    report(11, "lemmas: mu >= 0, mu <= chi-1, disjoint-union max law (200 pairs)", true);
    return true;
}

bool criterion12_lobster_search() {
    SweepLimits lim;
    lim.lobster_max_n = 16;
    lim.lobster_ct_max = 1;
    SweepReport rep = search_lobster_gap(lim);
    write_report_files(rep, "acceptance_out");
    std::string max_mu, witness_count;
    for (const auto& [k, v] : rep.stats) {
        if (k == "max_mu") max_mu = v;
        if (k == "max_mu_witness_count") witness_count = v;
    }
    // reproducibility: the maximal witnesses replay to the same mu
    bool replay_ok = true;
    if (std::stoi(max_mu) >= 3) {
        SweepReport again = search_lobster_gap(lim);
        std::string max2;
        for (const auto& [k, v] : again.stats)
            if (k == "max_mu") max2 = v;
        replay_ok = max2 == max_mu;
    }
    bool pass = rep.passed() && replay_ok;
    report(12, "lobster search (c_T <= 1, n <= 16) completes and replays", pass,
           std::to_string(rep.instances) + " lobsters, max mu = " + max_mu + " (" +
               witness_count + " witnesses)");
    return pass;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_oracle_equivalence();
    criterion2_closed_forms();
    criterion3_path_cycle_gap();
    criterion4_exact_gaps();
    criterion5_diameter2_law();
    criterion6_caterpillar_theorem();
    criterion7_gap1_fixtures();
    criterion8_corona();
    criterion9_pattern_certificates();
    criterion10_spiders();
    criterion11_lemmas();
    criterion12_lobster_search();
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
