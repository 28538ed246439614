// patterns.hpp - the explicit constructive colorings: certified upper
// bounds that stay checkable far beyond exact-solver reach, plus the
// committed gap-1 caterpillar fixtures.

#ifndef PCG_PATTERNS_HPP
#define PCG_PATTERNS_HPP

#include <vector>

#include "pcg/families.hpp"
#include "pcg/solver.hpp"

namespace pcg {

enum class PatternRule { path_1213, spider, corona_spine_12, caterpillar_via_corona };

struct PatternColoring {
    PackingColoring coloring;
    int claimed_max = 0;
    PatternRule rule = PatternRule::path_1213;
};

// The repeating (1,2,1,3) pattern along P_n; optimal for every n.
PatternColoring color_path_pattern(int n);

// Body colored 3, every leg colored 1,2,1,3,... walking outward.
PatternColoring color_spider(const SpiderSpec& spec);

// The 12-periodic spine pattern (2 4 3 5 2 6 3 4 2 5 3 7) for T (.) K_1:
// L_1 vertices get 1, L_2 vertices get 2 except under a spine vertex
// colored 2, where they get 3. Max color 7 for any base caterpillar.
PatternColoring color_corona_caterpillar(const FamilyInstance& inst);

// Restriction of the corona coloring to T itself: spine 12-pattern plus 1
// on the leaves. A constructive witness that caterpillars need at most 7
// colors.
PatternColoring color_caterpillar_via_corona(const CaterpillarSpec& spec);

// One committed caterpillar per k with chi_p = k and gap 1; the marked spine
// positions are the vertices whose deletion drops
// chi_p by exactly 1.
struct Gap1Fixture {
    int k = 0;
    CaterpillarSpec spec;
    FamilyInstance instance;
    int claimed_chi = 0;
    int claimed_gap = 0;
    std::vector<int> critical_spine;  // 0-indexed spine positions
    bool chi_exactly_verifiable = true;  // false for the 245-vertex k = 7 fixture
};

// k in 3..7.
Gap1Fixture gap1_fixture(int k);
std::vector<Gap1Fixture> gap1_fixtures();

// The fixture shape for k with every leaf bundle instantiated with
// `count` leaves.
CaterpillarSpec gap1_fixture_shape(int k, int count);

// Regeneration helper: smallest bundle count for which the exact solver
// confirms chi_p = k, mu_p = 1 and delta = 1 on every marked spine vertex.
// k in 3..6 (the k = 7 count is fixed at 6 by construction).
int gap1_fixture_min_count(int k, int max_count = 8);

}  // namespace pcg

#endif  // PCG_PATTERNS_HPP
