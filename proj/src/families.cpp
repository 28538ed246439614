#include "pcg/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcg {

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::spider: return "spider";
        case Family::caterpillar: return "caterpillar";
        case Family::lobster: return "lobster";
        case Family::corona: return "corona";
        case Family::friendship: return "friendship";
        case Family::windmill: return "windmill";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"complete", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"complete-bipartite", Family::complete_bipartite},
        {"star", Family::star},
        {"spider", Family::spider},
        {"caterpillar", Family::caterpillar},
        {"lobster", Family::lobster},
        {"corona", Family::corona},
        {"friendship", Family::friendship},
        {"windmill", Family::windmill},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

std::string join_ints(const std::vector<int>& v, char sep = ',') {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace

int CaterpillarSpec::order() const {
    return spine_length() + std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0);
}

bool CaterpillarSpec::canonical() const {
    const int l = spine_length();
    if (l < 1) return false;
    for (int a : leaf_counts)
        if (a < 0) return false;
    if (l >= 2 && (leaf_counts.front() < 1 || leaf_counts.back() < 1)) return false;
    std::vector<int> rev(leaf_counts.rbegin(), leaf_counts.rend());
    return leaf_counts <= rev;
}

CaterpillarSpec CaterpillarSpec::canonicalized() const {
    std::vector<int> rev(leaf_counts.rbegin(), leaf_counts.rend());
    return CaterpillarSpec{std::min(leaf_counts, rev)};
}

std::string CaterpillarSpec::to_string() const { return join_ints(leaf_counts); }

int SpiderSpec::order() const {
    return 1 + std::accumulate(leg_lengths.begin(), leg_lengths.end(), 0);
}

bool SpiderSpec::canonical_spider() const {
    if (leg_count() < 3) return false;
    for (int l : leg_lengths)
        if (l < 1) return false;
    return std::is_sorted(leg_lengths.rbegin(), leg_lengths.rend());
}

std::string SpiderSpec::to_string() const { return join_ints(leg_lengths); }

int LobsterSpec::order() const {
    int n = spine_length();
    for (const auto& bs : branches)
        for (int c : bs) n += 1 + c;
    return n;
}

int LobsterSpec::c_t() const {
    int best = 0;
    for (const auto& bs : branches) {
        int heavy = 0;
        for (int c : bs)
            if (c >= 3) ++heavy;
        best = std::max(best, heavy);
    }
    return best;
}

LobsterSpec LobsterSpec::canonicalized() const {
    LobsterSpec out = *this;
    for (auto& bs : out.branches) std::sort(bs.rbegin(), bs.rend());
    std::vector<std::vector<int>> rev(out.branches.rbegin(), out.branches.rend());
    if (rev < out.branches) out.branches = rev;
    return out;
}

std::string LobsterSpec::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (i) os << ';';
        os << join_ints(branches[i]);
    }
    return os.str();
}

std::string FamilyInstance::describe() const {
    std::ostringstream os;
    os << family_name(family);
    if (corona_base) os << "[" << family_name(*corona_base) << "]";
    os << "(" << join_ints(params) << ")";
    return os.str();
}

FamilyInstance gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    FamilyInstance inst{Family::path, {n}, Graph(n), {}, true, std::nullopt};
    for (int i = 0; i + 1 < n; ++i) inst.graph.add_edge(i, i + 1);
    inst.spine.resize(n);
    std::iota(inst.spine.begin(), inst.spine.end(), 0);
    return inst;
}

FamilyInstance gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    FamilyInstance inst{Family::cycle, {n}, Graph(n), {}, true, std::nullopt};
    for (int i = 0; i < n; ++i) inst.graph.add_edge(i, (i + 1) % n);
    return inst;
}

FamilyInstance gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    FamilyInstance inst{Family::complete, {n}, Graph(n), {}, true, std::nullopt};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) inst.graph.add_edge(u, v);
    return inst;
}

FamilyInstance gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite needs m, n >= 1");
    FamilyInstance inst{Family::complete_bipartite, {m, n}, Graph(m + n), {}, true, std::nullopt};
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) inst.graph.add_edge(u, m + v);
    return inst;
}

FamilyInstance gen_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs leaves >= 0");
    FamilyInstance inst{Family::star, {leaves}, Graph(leaves + 1), {0}, true, std::nullopt};
    for (int i = 1; i <= leaves; ++i) inst.graph.add_edge(0, i);
    return inst;
}

FamilyInstance gen_spider(const SpiderSpec& spec) {
    for (int l : spec.leg_lengths)
        if (l < 1) throw std::invalid_argument("spider legs need length >= 1");
    FamilyInstance inst{Family::spider, spec.leg_lengths, Graph(spec.order()), {0},
                        spec.canonical_spider(), std::nullopt};
    int next = 1;
    for (int len : spec.leg_lengths) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            inst.graph.add_edge(prev, next);
            prev = next++;
        }
    }
    return inst;
}

FamilyInstance gen_caterpillar(const CaterpillarSpec& spec) {
    const int l = spec.spine_length();
    if (l < 1) throw std::invalid_argument("caterpillar needs a non-empty leaf-count sequence");
    for (int a : spec.leaf_counts)
        if (a < 0) throw std::invalid_argument("leaf counts must be non-negative");
    FamilyInstance inst{Family::caterpillar, spec.leaf_counts, Graph(spec.order()), {},
                        spec.canonical(), std::nullopt};
    inst.spine.resize(l);
    std::iota(inst.spine.begin(), inst.spine.end(), 0);
    for (int i = 0; i + 1 < l; ++i) inst.graph.add_edge(i, i + 1);
    int next = l;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < spec.leaf_counts[i]; ++j) inst.graph.add_edge(i, next++);
    return inst;
}

FamilyInstance gen_lobster(const LobsterSpec& spec) {
    const int l = spec.spine_length();
    if (l < 1) throw std::invalid_argument("lobster needs a non-empty spine");
    for (const auto& bs : spec.branches)
        for (int c : bs)
            if (c < 0) throw std::invalid_argument("branch child counts must be non-negative");
    FamilyInstance inst{Family::lobster, {}, Graph(spec.order()), {}, true, std::nullopt};
    inst.spine.resize(l);
    std::iota(inst.spine.begin(), inst.spine.end(), 0);
    for (int i = 0; i + 1 < l; ++i) inst.graph.add_edge(i, i + 1);
    int next = l;
    for (int i = 0; i < l; ++i) {
        for (int c : spec.branches[i]) {
            int branch = next++;
            inst.graph.add_edge(i, branch);
            for (int j = 0; j < c; ++j) inst.graph.add_edge(branch, next++);
        }
    }
    inst.canonical = spec.canonicalized().branches == spec.branches;
    return inst;
}

FamilyInstance gen_friendship(int t) {
    if (t < 1) throw std::invalid_argument("friendship graph needs t >= 1");
    FamilyInstance inst{Family::friendship, {t}, Graph(2 * t + 1), {}, true, std::nullopt};
    for (int i = 0; i < t; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        inst.graph.add_edge(0, a);
        inst.graph.add_edge(0, b);
        inst.graph.add_edge(a, b);
    }
    return inst;
}

FamilyInstance gen_windmill(int m, int t) {
    if (m < 3) throw std::invalid_argument("windmill needs m >= 3");
    if (t < 1) throw std::invalid_argument("windmill needs t >= 1");
    FamilyInstance inst{Family::windmill, {m, t}, Graph(t * (m - 1) + 1), {}, true, std::nullopt};
    for (int i = 0; i < t; ++i) {
        int base = 1 + i * (m - 1);
        for (int u = 0; u < m - 1; ++u) {
            inst.graph.add_edge(0, base + u);
            for (int v = u + 1; v < m - 1; ++v) inst.graph.add_edge(base + u, base + v);
        }
    }
    return inst;
}

FamilyInstance corona_k1(const FamilyInstance& base) {
    const int n = base.graph.order();
    if (n == 0) throw std::invalid_argument("corona of the empty graph is undefined");
    FamilyInstance inst{Family::corona, base.params, Graph(2 * n), base.spine,
                        base.canonical, base.family};
    for (auto [u, v] : base.graph.edges()) inst.graph.add_edge(u, v);
    for (int i = 0; i < n; ++i) inst.graph.add_edge(i, n + i);
    return inst;
}

// --- enumeration ---------------------------------------------------------

namespace {

// Compositions (a_1..a_l) of `total` leaves over spine length l with the
// canonical endpoint constraint; emits only sequences <= their reversal.
void caterpillar_sequences(int l, int total, std::vector<int>& prefix,
                           const std::function<void(const CaterpillarSpec&)>& emit) {
    const int pos = static_cast<int>(prefix.size());
    if (pos == l) {
        if (total == 0) {
            std::vector<int> rev(prefix.rbegin(), prefix.rend());
            if (prefix <= rev) emit(CaterpillarSpec{prefix});
        }
        return;
    }
    const bool endpoint = (l >= 2) && (pos == 0 || pos == l - 1);
    int lo = endpoint ? 1 : 0;
    // Leave at least 1 leaf for the final spine vertex when l >= 2.
    int reserve = (l >= 2 && pos < l - 1) ? 1 : 0;
    for (int a = lo; a <= total - reserve; ++a) {
        prefix.push_back(a);
        caterpillar_sequences(l, total - a, prefix, emit);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_caterpillars(int max_n, const std::function<void(const CaterpillarSpec&)>& emit) {
    if (max_n < 1) return;
    for (int n = 1; n <= max_n; ++n) {
        // l = 1: the star K_{1,n-1} (K_1 and K_2 included).
        emit(CaterpillarSpec{{n - 1}});
        for (int l = 2; l <= n - 2; ++l) {
            std::vector<int> prefix;
            caterpillar_sequences(l, n - l, prefix, emit);
        }
    }
}

std::vector<CaterpillarSpec> enumerate_caterpillars(int max_n) {
    std::vector<CaterpillarSpec> out;
    enumerate_caterpillars(max_n, [&](const CaterpillarSpec& s) { out.push_back(s); });
    return out;
}

namespace {

void spider_multisets(int remaining_legs, int max_len, int cap, std::vector<int>& prefix,
                      const std::function<void(const SpiderSpec&)>& emit) {
    if (!prefix.empty()) emit(SpiderSpec{prefix});
    if (remaining_legs == 0) return;
    for (int len = std::min(cap, max_len); len >= 1; --len) {
        prefix.push_back(len);
        spider_multisets(remaining_legs - 1, max_len, len, prefix, emit);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_spiders(int max_legs, int max_leg_len,
                       const std::function<void(const SpiderSpec&)>& emit) {
    if (max_legs < 1 || max_leg_len < 1) return;
    std::vector<int> prefix;
    spider_multisets(max_legs, max_leg_len, max_leg_len, prefix, emit);
}

std::vector<SpiderSpec> enumerate_spiders(int max_legs, int max_leg_len) {
    std::vector<SpiderSpec> out;
    enumerate_spiders(max_legs, max_leg_len, [&](const SpiderSpec& s) { out.push_back(s); });
    return out;
}

namespace {

// Branch multisets (descending child counts) of total weight <= budget,
// weight of a branch with c children being 1 + c.
void branch_multisets(int budget, int cap, int ct_max, int heavy, std::vector<int>& prefix,
                      const std::function<void(const std::vector<int>&)>& emit) {
    emit(prefix);
    for (int c = std::min(cap, budget - 1); c >= 0; --c) {
        int h = heavy + (c >= 3 ? 1 : 0);
        if (h > ct_max) continue;
        prefix.push_back(c);
        branch_multisets(budget - 1 - c, c, ct_max, h, prefix, emit);
        prefix.pop_back();
    }
}

struct LobsterEnumState {
    int max_n;
    int ct_max;
    std::set<std::string> seen;
    const std::function<void(const LobsterSpec&)>* emit;
};

void lobster_positions(LobsterEnumState& st, int l, int pos, int used, LobsterSpec& spec) {
    if (pos == l) {
        LobsterSpec canon = spec.canonicalized();
        if (canon.branches != spec.branches) return;  // reversal representative only
        FamilyInstance inst = gen_lobster(canon);
        std::string cert = tree_certificate(inst.graph);
        if (st.seen.insert(std::move(cert)).second) (*st.emit)(canon);
        return;
    }
    const bool endpoint = (l >= 2) && (pos == 0 || pos == l - 1);
    int budget = st.max_n - used;  // spine vertices are all in `used` already
    // Endpoints of a multi-vertex spine must carry a branch, otherwise the
    // same tree appears again with a shorter spine.
    std::vector<int> prefix;
    branch_multisets(budget, budget, st.ct_max, 0, prefix, [&](const std::vector<int>& bs) {
        if (endpoint && bs.empty()) return;
        int w = 0;
        for (int c : bs) w += 1 + c;
        spec.branches[pos] = bs;
        lobster_positions(st, l, pos + 1, used + w, spec);
        spec.branches[pos].clear();
    });
}

}  // namespace

void enumerate_lobsters(int max_n, int ct_max,
                        const std::function<void(const LobsterSpec&)>& emit) {
    if (max_n < 1 || ct_max < 0) return;
    LobsterEnumState st{max_n, ct_max, {}, &emit};
    for (int l = 1; l <= max_n; ++l) {
        if (l >= 2 && l + 2 > max_n) break;  // endpoints need a branch each
        LobsterSpec spec;
        spec.branches.assign(l, {});
        lobster_positions(st, l, 0, l, spec);
    }
}

std::vector<LobsterSpec> enumerate_lobsters(int max_n, int ct_max) {
    std::vector<LobsterSpec> out;
    enumerate_lobsters(max_n, ct_max, [&](const LobsterSpec& s) { out.push_back(s); });
    return out;
}

int compute_ct(const FamilyInstance& inst) {
    if (inst.spine.empty()) throw std::invalid_argument("compute_ct needs a designated spine");
    std::vector<char> on_spine(inst.graph.order(), 0);
    for (int v : inst.spine) on_spine[v] = 1;
    int best = 0;
    for (int v : inst.spine) {
        int heavy = 0;
        for (int w : inst.graph.neighbors(v))
            if (!on_spine[w] && inst.graph.degree(w) >= 4) ++heavy;
        best = std::max(best, heavy);
    }
    return best;
}

std::optional<int> formula_chi(const FamilyInstance& inst) {
    switch (inst.family) {
        case Family::path: {
            int n = inst.params[0];
            if (n == 1) return 1;
            if (n <= 3) return 2;
            return 3;
        }
        case Family::cycle: {
            int n = inst.params[0];
            return (n == 3 || n % 4 == 0) ? 3 : 4;
        }
        case Family::complete:
            return inst.params[0];
        case Family::complete_bipartite:
            return 1 + std::min(inst.params[0], inst.params[1]);
        case Family::star:
            return inst.params[0] == 0 ? 1 : 2;
        case Family::friendship:
            return inst.params[0] + 2;
        case Family::windmill: {
            int m = inst.params[0], t = inst.params[1];
            return t * (m - 2) + 2;
        }
        default:
            return std::nullopt;
    }
}

std::optional<int> formula_gap(const FamilyInstance& inst) {
    switch (inst.family) {
        case Family::complete:
            return 1;
        case Family::friendship:
            return inst.params[0];
        case Family::windmill: {
            int m = inst.params[0], t = inst.params[1];
            return t * (m - 2) - m + 3;
        }
        default:
            return std::nullopt;
    }
}

// --- tree certificate -----------------------------------------------------

namespace {

std::string ahu_code(const Graph& g, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(v))
        if (w != parent) child_codes.push_back(ahu_code(g, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// The one or two middle vertices of the tree (peel leaves inward).
std::vector<int> tree_centers(const Graph& g) {
    const int n = g.order();
    if (n == 1) return {0};
    std::vector<int> deg(n), layer, next;
    int remaining = n;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string tree_certificate(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("tree_certificate needs a tree");
    std::string best;
    for (int c : tree_centers(g)) {
        std::string code = ahu_code(g, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace pcg
