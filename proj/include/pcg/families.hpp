// families.hpp - generators for the graph families under study, canonical
// enumeration of caterpillars / spiders / lobsters, the corona operation,
// the c_T parameter and the closed-form chi_p / mu_p oracles.

#ifndef PCG_FAMILIES_HPP
#define PCG_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    spider,
    caterpillar,
    lobster,
    corona,
    friendship,
    windmill,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Caterpillar as its leaf-count sequence: spine vertex i carries
// leaf_counts[i] leaves. Canonical form: for spine length >= 2 both end
// counts are >= 1, and the sequence is lexicographically <= its reversal.
// K_1 is (0), K_2 is (1), P_n for n >= 4 is (1,0,...,0,1).
struct CaterpillarSpec {
    std::vector<int> leaf_counts;

    int spine_length() const { return static_cast<int>(leaf_counts.size()); }
    int order() const;
    bool canonical() const;
    CaterpillarSpec canonicalized() const;  // picks min(seq, reversed seq)
    std::string to_string() const;
};

// Spider as the multiset of its leg lengths, measured in edges from the
// body. Sorted descending in canonical form. Fewer than 3 legs makes the
// graph a path; such specs are accepted but flagged non-canonical.
struct SpiderSpec {
    std::vector<int> leg_lengths;

    int leg_count() const { return static_cast<int>(leg_lengths.size()); }
    int order() const;
    bool canonical_spider() const;
    std::string to_string() const;
};

// Lobster: a spine path plus, per spine vertex, a multiset of branches.
// A branch is one off-spine vertex carrying `child_count` leaves at
// distance 2 from the spine (child_count == 0 is a plain spine leaf).
struct LobsterSpec {
    // branches[i] = sorted (descending) child counts of spine vertex i's
    // off-spine neighbors.
    std::vector<std::vector<int>> branches;

    int spine_length() const { return static_cast<int>(branches.size()); }
    int order() const;
    int c_t() const;  // branch vertex has degree >= 4 iff child_count >= 3
    LobsterSpec canonicalized() const;
    std::string to_string() const;
};

// A generated graph together with its structural metadata. `spine` is the
// designated central path where the family has one (spider body is a
// one-vertex spine).
struct FamilyInstance {
    Family family;
    std::vector<int> params;
    Graph graph;
    std::vector<int> spine;
    bool canonical = true;
    std::optional<Family> corona_base;  // set for corona instances

    std::string describe() const;
};

FamilyInstance gen_path(int n);
FamilyInstance gen_cycle(int n);
FamilyInstance gen_complete(int n);
FamilyInstance gen_complete_bipartite(int m, int n);
FamilyInstance gen_star(int leaves);
FamilyInstance gen_spider(const SpiderSpec& spec);
FamilyInstance gen_caterpillar(const CaterpillarSpec& spec);
FamilyInstance gen_lobster(const LobsterSpec& spec);
FamilyInstance gen_friendship(int t);
FamilyInstance gen_windmill(int m, int t);

// T (.) K_1: vertex i of the base gains the pendant neighbor n+i. The
// spine carries over from the base.
FamilyInstance corona_k1(const FamilyInstance& base);

// Exactly one canonical spec per isomorphism class with <= max_n vertices,
// in deterministic order (by order, then spine length, then sequence).
void enumerate_caterpillars(int max_n, const std::function<void(const CaterpillarSpec&)>& emit);
std::vector<CaterpillarSpec> enumerate_caterpillars(int max_n);

// One spec per non-empty multiset of leg lengths, sorted descending.
void enumerate_spiders(int max_legs, int max_leg_len,
                       const std::function<void(const SpiderSpec&)>& emit);
std::vector<SpiderSpec> enumerate_spiders(int max_legs, int max_leg_len);

// One spec per isomorphism class with <= max_n vertices and c_T <= ct_max.
// Spec-level canonicalization leaves duplicate classes behind; those are
// removed with a tree certificate, so emission is certificate-deduplicated.
void enumerate_lobsters(int max_n, int ct_max,
                        const std::function<void(const LobsterSpec&)>& emit);
std::vector<LobsterSpec> enumerate_lobsters(int max_n, int ct_max);

// Max over spine vertices of the number of off-spine neighbors with degree
// >= 4. Requires a designated spine.
int compute_ct(const FamilyInstance& inst);

// Closed-form chi_p where the family admits one (path, cycle, complete,
// complete bipartite, star, friendship, windmill).
std::optional<int> formula_chi(const FamilyInstance& inst);

// Closed-form mu_p where one is known: complete graphs, friendship,
// windmill.
std::optional<int> formula_gap(const FamilyInstance& inst);

// Canonical certificate for free trees (AHU encoding rooted at the tree
// center); equal strings iff isomorphic. Throws if g is not a tree.
std::string tree_certificate(const Graph& g);

}  // namespace pcg

#endif  // PCG_FAMILIES_HPP
