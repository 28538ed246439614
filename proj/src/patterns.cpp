#include "pcg/patterns.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "pcg/gap.hpp"

namespace pcg {

namespace {

constexpr std::array<int, 4> kPathPattern = {1, 2, 1, 3};
constexpr std::array<int, 12> kSpinePattern = {2, 4, 3, 5, 2, 6, 3, 4, 2, 5, 3, 7};

}  // namespace

PatternColoring color_path_pattern(int n) {
    if (n < 1) throw std::invalid_argument("path pattern needs n >= 1");
    PatternColoring out;
    out.rule = PatternRule::path_1213;
    out.coloring.colors.resize(n);
    for (int i = 0; i < n; ++i) out.coloring.colors[i] = kPathPattern[i % 4];
    out.claimed_max = n == 1 ? 1 : (n <= 3 ? 2 : 3);
    return out;
}

PatternColoring color_spider(const SpiderSpec& spec) {
    PatternColoring out;
    out.rule = PatternRule::spider;
    out.claimed_max = 3;
    out.coloring.colors.assign(spec.order(), 0);
    out.coloring.colors[0] = 3;  // body
    int next = 1;
    for (int len : spec.leg_lengths)
        for (int step = 0; step < len; ++step) out.coloring.colors[next++] = kPathPattern[step % 4];
    return out;
}

PatternColoring color_corona_caterpillar(const FamilyInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.order();
    if (inst.spine.empty()) throw std::invalid_argument("corona coloring needs a designated spine");
    if (n % 2 != 0) throw std::invalid_argument("not a corona: odd vertex count");
    const int base_n = n / 2;
    // Convention from corona_k1: vertex i < base_n is original, base_n + i
    // is its pendant.
    for (int i = 0; i < base_n; ++i) {
        if (!g.adjacent(i, base_n + i) || g.degree(base_n + i) != 1)
            throw std::invalid_argument("not a corona: pendant structure missing");
    }
    std::vector<int> spine_pos(n, -1);
    for (size_t j = 0; j < inst.spine.size(); ++j) {
        int v = inst.spine[j];
        if (v < 0 || v >= base_n) throw std::invalid_argument("spine must lie in the base graph");
        spine_pos[v] = static_cast<int>(j);
    }
    // Base vertices off the spine must be caterpillar leaves: exactly one
    // base neighbor, and that neighbor on the spine.
    for (int v = 0; v < base_n; ++v) {
        if (spine_pos[v] >= 0) continue;
        int base_deg = 0, spine_nb = -1;
        for (int w : g.neighbors(v))
            if (w < base_n) {
                ++base_deg;
                spine_nb = w;
            }
        if (base_deg != 1 || spine_pos[spine_nb] < 0)
            throw std::invalid_argument("base graph is not a caterpillar over this spine");
    }

    // L_1 takes color 1 throughout: two L_1 vertices are at distance >= 2
    // (each has its spine vertex as only non-pendant neighbor), so 1 is
    // always safe there and frees 2..7 for the spine and L_2 discipline.
    PatternColoring out;
    out.rule = PatternRule::corona_spine_12;
    out.claimed_max = 7;
    out.coloring.colors.assign(n, 0);
    for (int v = 0; v < base_n; ++v) {
        if (spine_pos[v] >= 0) {
            out.coloring.colors[v] = kSpinePattern[spine_pos[v] % 12];
        } else {
            out.coloring.colors[v] = 1;  // L_1: an original leaf of T
        }
    }
    for (int v = 0; v < base_n; ++v) {
        int pendant = base_n + v;
        if (spine_pos[v] >= 0) {
            out.coloring.colors[pendant] = 1;  // L_1: pendant of a spine vertex
        } else {
            // L_2: pendant of a leaf; 2 unless the spine vertex above is
            // colored 2, then 3.
            int above = -1;
            for (int w : g.neighbors(v))
                if (w < base_n) above = w;
            out.coloring.colors[pendant] = out.coloring.colors[above] == 2 ? 3 : 2;
        }
    }
    return out;
}

PatternColoring color_caterpillar_via_corona(const CaterpillarSpec& spec) {
    const int l = spec.spine_length();
    PatternColoring out;
    out.rule = PatternRule::caterpillar_via_corona;
    out.claimed_max = 7;
    out.coloring.colors.assign(spec.order(), 1);  // leaves keep 1
    for (int j = 0; j < l; ++j) out.coloring.colors[j] = kSpinePattern[j % 12];
    return out;
}

namespace {

// Committed bundle counts for the gap-1 fixtures, found with
// gap1_fixture_min_count (regenerable via `pcg fixtures --search`).
constexpr std::array<int, 4> kFixtureCounts = {1, 2, 2, 3};  // k = 3, 4, 5, 6

std::vector<int> fixture_marked(int k) {
    switch (k) {
        case 3: return {0, 1};
        case 4: return {0, 1, 2, 3, 4};
        case 5: return {1, 2, 3, 4};
        case 6: return {3, 5};
        case 7: {
            std::vector<int> all(35);
            for (int i = 0; i < 35; ++i) all[i] = i;
            return all;
        }
        default: throw std::invalid_argument("gap-1 fixtures cover k = 3..7");
    }
}

}  // namespace

CaterpillarSpec gap1_fixture_shape(int k, int count) {
    if (count < 1) throw std::invalid_argument("bundle count must be >= 1");
    switch (k) {
        case 3: return CaterpillarSpec{{count, count}};
        case 4: return CaterpillarSpec{{count, 0, 0, count, count}};
        case 5: return CaterpillarSpec{std::vector<int>(6, count)};
        case 6: return CaterpillarSpec{std::vector<int>(10, count)};
        case 7: return CaterpillarSpec{std::vector<int>(35, count)};
        default: throw std::invalid_argument("gap-1 fixtures cover k = 3..7");
    }
}

Gap1Fixture gap1_fixture(int k) {
    Gap1Fixture fx;
    fx.k = k;
    fx.claimed_chi = k;
    fx.claimed_gap = 1;
    fx.critical_spine = fixture_marked(k);
    fx.spec = k == 7 ? gap1_fixture_shape(7, 6) : gap1_fixture_shape(k, kFixtureCounts[k - 3]);
    fx.instance = gen_caterpillar(fx.spec);
    fx.chi_exactly_verifiable = k != 7;
    return fx;
}

std::vector<Gap1Fixture> gap1_fixtures() {
    std::vector<Gap1Fixture> out;
    for (int k = 3; k <= 7; ++k) out.push_back(gap1_fixture(k));
    return out;
}

int gap1_fixture_min_count(int k, int max_count) {
    if (k < 3 || k > 6) throw std::invalid_argument("count search covers k = 3..6");
    std::vector<int> marked = fixture_marked(k);
    for (int c = 1; c <= max_count; ++c) {
        FamilyInstance inst = gen_caterpillar(gap1_fixture_shape(k, c));
        SolveResult res = chi_p(inst.graph);
        if (res.chi != k) continue;
        GapReport rep = gap_report(inst.graph, {}, GapScope::spine, inst.spine);
        if (rep.mu != 1) continue;
        bool marked_ok = true;
        for (int pos : marked)
            if (rep.delta_of(inst.spine[pos]) != 1) marked_ok = false;
        if (marked_ok) return c;
    }
    return -1;
}

}  // namespace pcg
