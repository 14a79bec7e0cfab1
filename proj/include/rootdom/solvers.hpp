#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rootdom/graph.hpp"
#include "rootdom/predicates.hpp"
#include "rootdom/product.hpp"

namespace rootdom {

enum class Parameter {
    Domination,            // γ
    Independence,          // α, maximised
    IndependentDomination, // i
    Roman,                 // γ_R
    Connected,             // γ_c
    Convex,                // γ_con
    WeaklyConnected,       // γ_w
    Super,                 // γ_sp
};

inline constexpr std::array<Parameter, 8> kAllParameters = {
    Parameter::Domination, Parameter::Independence, Parameter::IndependentDomination, Parameter::Roman,
    Parameter::Connected,  Parameter::Convex,       Parameter::WeaklyConnected,       Parameter::Super,
};

inline std::string_view parameter_name(Parameter p) {
    switch (p) {
        case Parameter::Domination: return "gamma";
        case Parameter::Independence: return "alpha";
        case Parameter::IndependentDomination: return "i";
        case Parameter::Roman: return "roman";
        case Parameter::Connected: return "connected";
        case Parameter::Convex: return "convex";
        case Parameter::WeaklyConnected: return "weakly";
        case Parameter::Super: return "super";
    }
    return "?";
}

inline Parameter parse_parameter(std::string_view name) {
    for (Parameter p : kAllParameters) {
        if (parameter_name(p) == name) return p;
    }
    throw InputError("unknown parameter \"" + std::string(name) +
                     "\" (expected gamma|alpha|i|roman|connected|convex|weakly|super)");
}

/// Resource caps. max_scan_order bounds plain 2^n subset scans and can be
/// overridden with ROOTDOM_BUDGET; max_search_nodes bounds the pruned searches.
struct Budget {
    int max_scan_order = 22;
    long long max_search_nodes = 4'000'000'000LL;
    long long enumeration_cap = 1'000'000;

    static Budget from_environment() {
        Budget b;
        if (const char* env = std::getenv("ROOTDOM_BUDGET"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (*end != '\0' || v < 0 || v > kMaxOrder) {
                throw InputError(std::string("ROOTDOM_BUDGET must be an integer in [0, 64], got \"") + env + "\"");
            }
            b.max_scan_order = static_cast<int>(v);
        }
        return b;
    }
};

/// f = (B0, B1, B2) with B0 the complement of B1 ∪ B2.
struct RomanAssignment {
    VertexSet b1;
    VertexSet b2;

    int weight() const { return 2 * b2.size() + b1.size(); }
    int value_at(Vertex v) const { return b2.contains(v) ? 2 : (b1.contains(v) ? 1 : 0); }

    bool is_valid(const Graph& g) const {
        if (b1.intersects(b2) || !g.contains(b1 | b2)) return false;
        VertexSet zeros = g.vertices() - b1 - b2;
        return zeros.is_subset_of(g.neighbors(b2));
    }

    /// The cheapest completion of a given B2: every vertex not covered by
    /// N[B2] must carry label 1. Any minimum-weight Roman dominating function
    /// has this shape, since a 1 on a vertex next to B2 could be lowered to 0.
    static RomanAssignment forced(const Graph& g, VertexSet b2) {
        return {g.vertices() - g.closed_neighbors(b2), b2};
    }

    bool operator==(const RomanAssignment&) const = default;
};

using Witness = std::variant<VertexSet, RomanAssignment>;

struct SolveResult {
    Parameter kind = Parameter::Domination;
    int value = 0;
    Witness witness;
    std::optional<long long> optimal_count;

    const VertexSet& set() const { return std::get<VertexSet>(witness); }
    const RomanAssignment& roman() const { return std::get<RomanAssignment>(witness); }
};

/// Membership predicate of each set-valued parameter.
inline bool satisfies(const Graph& g, Parameter kind, VertexSet s) {
    switch (kind) {
        case Parameter::Domination: return is_dominating(g, s);
        case Parameter::Independence: return is_independent(g, s);
        case Parameter::IndependentDomination: return is_independent_dominating(g, s);
        case Parameter::Connected: return is_connected_dominating(g, s);
        case Parameter::Convex: return is_connected(g) && is_convex_dominating(g, s);
        case Parameter::WeaklyConnected: return is_weakly_connected_dominating(g, s);
        case Parameter::Super: return is_super_dominating(g, s);
        case Parameter::Roman: break;
    }
    throw InputError("Roman domination is not a vertex-set parameter");
}

// ---------------------------------------------------------------------------
// Generic extremal-subset engine: plain cardinality-ordered scan.

enum class Direction { Minimize, Maximize };

struct ExtremalResult {
    int value = 0;
    VertexSet witness;
    std::vector<VertexSet> optimal;  // filled when enumeration was requested
};

/// Scans subsets by cardinality (ascending for Minimize, descending for
/// Maximize), each size in lexicographic order, and stops at the first size
/// with a feasible subset. No pruning; intended for small graphs and as a
/// reference path.
inline ExtremalResult minimum_set(const Graph& g, const std::function<bool(VertexSet)>& predicate,
                                  Direction direction, const Budget& budget = {}, bool enumerate = false) {
    const int n = g.order();
    if (n > budget.max_scan_order) {
        throw ResourceError("subset scan on " + std::to_string(n) + " vertices exceeds max_scan_order=" +
                            std::to_string(budget.max_scan_order));
    }
    std::vector<Vertex> idx;
    for (int step = 0; step <= n; ++step) {
        const int k = direction == Direction::Minimize ? step : n - step;
        ExtremalResult res;
        res.value = k;
        bool found = false;
        idx.resize(k);
        for (int j = 0; j < k; ++j) idx[j] = j;
        while (true) {
            VertexSet s;
            for (Vertex v : idx) s.insert(v);
            if (predicate(s)) {
                if (!found) res.witness = s;
                found = true;
                if (!enumerate) break;
                if (static_cast<long long>(res.optimal.size()) >= budget.enumeration_cap) {
                    throw ResourceError("enumeration cap " + std::to_string(budget.enumeration_cap) + " exceeded",
                                        static_cast<long long>(res.optimal.size()));
                }
                res.optimal.push_back(s);
            }
            int j = k - 1;
            while (j >= 0 && idx[j] == n - k + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
        if (found) return res;
    }
    throw InfeasibleError("no subset satisfies the predicate");
}

// ---------------------------------------------------------------------------
// Pruned search for the set-valued parameters.

namespace detail {

/// Include/exclude search over vertices in ascending id order for sets of an
/// exact size k. Include is tried first, so sets are produced in
/// lexicographic order and the first hit is the lexicographically smallest.
///
/// Pruning rules (all sound for the respective kind):
///  - independence: neighbors of chosen vertices are skipped;
///  - domination: a vertex not yet dominated needs an undecided candidate in
///    its closed neighborhood, and the undominated count bounds the number
///    of additional vertices required;
///  - connected/convex: cut vertices are forced in, and chosen vertices must
///    share a component of G[chosen ∪ undecided]; convex sets additionally
///    must not have an excluded vertex inside their geodesic hull;
///  - weakly connected: chosen vertices must share a component of the
///    "distance at most two" graph restricted to chosen ∪ undecided;
///  - super: every excluded vertex must keep a possible witness neighbor;
///  - independence number: a greedy matching bounds what the undecided part
///    can still contribute.
class ConstrainedSearch {
public:
    ConstrainedSearch(const Graph& g, Parameter kind, const Budget& budget, long long& nodes)
        : g_(g), kind_(kind), n_(g.order()), budget_(budget), nodes_(nodes) {
        dominating_ = kind != Parameter::Independence;
        independent_ = kind == Parameter::Independence || kind == Parameter::IndependentDomination;
        connected_ = kind == Parameter::Connected || kind == Parameter::Convex;
        convex_ = kind == Parameter::Convex;
        weakly_ = kind == Parameter::WeaklyConnected;
        super_ = kind == Parameter::Super;
        if (connected_) forced_ = cut_vertices(g);
        if (convex_ || weakly_) {
            const DistanceTable& d = g.distances();
            if (convex_) {
                interval_.assign(static_cast<std::size_t>(n_) * n_, VertexSet{});
                for (Vertex a = 0; a < n_; ++a)
                    for (Vertex b = a; b < n_; ++b)
                        interval_[a * n_ + b] = interval_[b * n_ + a] = geodesic_interval(g, a, b);
            }
            if (weakly_) {
                near_.assign(n_, VertexSet{});
                for (Vertex a = 0; a < n_; ++a)
                    for (Vertex b = 0; b < n_; ++b)
                        if (a != b && d.reachable(a, b) && d.at(a, b) <= 2) near_[a].insert(b);
            }
        }
    }

    VertexSet forced() const { return forced_; }

    /// Calls visit(set) for each feasible set of size k, in lexicographic
    /// order, until visit returns false. Returns false iff stopped early.
    bool run(int k, const std::function<bool(VertexSet)>& visit) {
        k_ = k;
        visit_ = &visit;
        return dfs(0, VertexSet{});
    }

private:
    VertexSet suffix(Vertex i) const { return VertexSet::full(n_) - VertexSet::full(i); }

    VertexSet hull(VertexSet s) const {
        VertexSet h = s;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex a : h) {
                for (Vertex b : h) {
                    if (b <= a) continue;
                    VertexSet iv = interval_[a * n_ + b];
                    if (!iv.is_subset_of(h)) {
                        h |= iv;
                        changed = true;
                    }
                }
            }
        }
        return h;
    }

    VertexSet component(VertexSet within, Vertex start, bool use_near) const {
        VertexSet seen = VertexSet::single(start);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            if (use_near) {
                for (Vertex x : frontier) next |= near_[x];
            } else {
                next = g_.neighbors(frontier);
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    // True if the partial assignment can still be completed.
    bool feasible(Vertex i, VertexSet chosen, VertexSet undecided) const {
        const VertexSet excluded = VertexSet::full(i) - chosen;
        if (forced_.intersects(excluded)) return false;
        VertexSet committed = chosen;
        VertexSet avail = undecided;
        if ((connected_ || weakly_) && !chosen.empty()) {
            VertexSet comp = component(chosen | undecided, chosen.first(), weakly_);
            if (!chosen.is_subset_of(comp)) return false;
            avail &= comp;
            if (convex_) {
                committed = hull(chosen);
                if (committed.intersects(excluded) || !committed.is_subset_of(comp) || committed.size() > k_) {
                    return false;
                }
            }
        }
        if (dominating_) {
            VertexSet undominated = g_.vertices() - g_.closed_neighbors(committed);
            if (!undominated.empty()) {
                if (!undominated.is_subset_of(g_.closed_neighbors(avail))) return false;
                int best = 0;
                for (Vertex u : avail) best = std::max(best, (g_.closed_neighbors(u) & undominated).size());
                const int need = (undominated.size() + best - 1) / best;
                if (committed.size() + need > k_) return false;
            }
        }
        if (super_) {
            const VertexSet possible = chosen | undecided;
            for (Vertex x : excluded) {
                bool ok = false;
                for (Vertex u : g_.neighbors(x) & possible) {
                    if (!(g_.neighbors(u) - VertexSet::single(x)).intersects(excluded)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
        }
        if (kind_ == Parameter::Independence) {
            // Each edge of a matching in G[undecided] contributes at most one vertex.
            VertexSet left = undecided;
            int matched = 0;
            while (!left.empty()) {
                Vertex u = left.first();
                left.erase(u);
                VertexSet nb = g_.neighbors(u) & left;
                if (!nb.empty()) {
                    left.erase(nb.first());
                    ++matched;
                }
            }
            if (chosen.size() + undecided.size() - matched < k_) return false;
        }
        return true;
    }

    bool emit(VertexSet s) {
        if (s.size() != k_ || !satisfies(g_, kind_, s)) return true;
        return (*visit_)(s);
    }

    bool dfs(Vertex i, VertexSet chosen) {
        if (++nodes_ > budget_.max_search_nodes) {
            throw ResourceError("search exceeded max_search_nodes=" + std::to_string(budget_.max_search_nodes));
        }
        VertexSet undecided = suffix(i);
        if (independent_) undecided -= g_.neighbors(chosen);
        const int c = chosen.size();
        if (c > k_ || c + undecided.size() < k_) return true;
        if (c == k_) {
            if (!feasible(n_, chosen, VertexSet{})) return true;
            return emit(chosen);
        }
        if (c + undecided.size() == k_) {
            // only completion: take every undecided vertex
            if (!feasible(n_, chosen | undecided, VertexSet{})) return true;
            return emit(chosen | undecided);
        }
        if (!feasible(i, chosen, undecided)) return true;
        Vertex x = undecided.first();
        // vertices skipped by independence count as excluded
        if (!dfs(x + 1, chosen | VertexSet::single(x))) return false;
        if (forced_.contains(x)) return true;
        return dfs(x + 1, chosen);
    }

    const Graph& g_;
    Parameter kind_;
    int n_;
    const Budget& budget_;
    long long& nodes_;
    bool dominating_ = false, independent_ = false, connected_ = false, convex_ = false, weakly_ = false,
         super_ = false;
    VertexSet forced_;
    std::vector<VertexSet> interval_;
    std::vector<VertexSet> near_;
    int k_ = 0;
    const std::function<bool(VertexSet)>* visit_ = nullptr;
};

inline void require_feasible(const Graph& g, Parameter kind) {
    if (g.order() == 0) throw InputError(std::string(parameter_name(kind)) + " is undefined on the empty graph");
    const bool needs_connected =
        kind == Parameter::Connected || kind == Parameter::Convex || kind == Parameter::WeaklyConnected;
    if (needs_connected && !is_connected(g)) {
        throw InfeasibleError(std::string(parameter_name(kind)) + " domination is infeasible on a disconnected graph");
    }
}

inline int search_lower_bound(const Graph& g, Parameter kind) {
    const int n = g.order();
    int lb = std::max(1, (n + g.max_degree()) / (g.max_degree() + 1));
    if (kind == Parameter::Super) lb = std::max(lb, (n + 1) / 2);
    if (kind == Parameter::Connected || kind == Parameter::Convex) lb = std::max(lb, cut_vertices(g).size());
    return lb;
}

inline int independence_upper_bound(const Graph& g) {
    VertexSet left = g.vertices();
    int matched = 0;
    while (!left.empty()) {
        Vertex u = left.first();
        left.erase(u);
        VertexSet nb = g.neighbors(u) & left;
        if (!nb.empty()) {
            left.erase(nb.first());
            ++matched;
        }
    }
    return g.order() - matched;
}

struct SetOptimum {
    int value = 0;
    VertexSet witness;
};

inline SetOptimum optimize_sets(const Graph& g, Parameter kind, const Budget& budget) {
    require_feasible(g, kind);
    long long nodes = 0;
    ConstrainedSearch search(g, kind, budget, nodes);
    std::optional<VertexSet> hit;
    auto first = [&](VertexSet s) {
        hit = s;
        return false;
    };
    if (kind == Parameter::Independence) {
        for (int k = independence_upper_bound(g); k >= 0; --k) {
            search.run(k, first);
            if (hit) return {k, *hit};
        }
    } else {
        for (int k = search_lower_bound(g, kind); k <= g.order(); ++k) {
            search.run(k, first);
            if (hit) return {k, *hit};
        }
    }
    throw InfeasibleError(std::string("no feasible set for ") + std::string(parameter_name(kind)));
}

inline std::vector<VertexSet> enumerate_sets_of_size(const Graph& g, Parameter kind, int k, const Budget& budget) {
    long long nodes = 0;
    ConstrainedSearch search(g, kind, budget, nodes);
    std::vector<VertexSet> out;
    search.run(k, [&](VertexSet s) {
        if (static_cast<long long>(out.size()) >= budget.enumeration_cap) {
            throw ResourceError("enumeration cap " + std::to_string(budget.enumeration_cap) + " exceeded",
                                static_cast<long long>(out.size()));
        }
        out.push_back(s);
        return true;
    });
    return out;
}

// Roman search over B2 with B1 forced. At a node with B2 fixed on ids < i,
// a vertex outside N[B2] with no undecided closed neighbor must take label 1,
// giving the lower bound 2|B2| + |such vertices|.
class RomanSearch {
public:
    RomanSearch(const Graph& g, const Budget& budget) : g_(g), n_(g.order()), budget_(budget) {}

    int optimum() {
        best_ = 2 * n_ + 1;
        mode_ = Mode::Optimize;
        dfs(0, VertexSet{}, VertexSet{});
        return best_;
    }

    /// Visits every assignment of weight `target` in include-first order.
    void visit(int target, const std::function<bool(const RomanAssignment&)>& fn) {
        best_ = target;
        mode_ = Mode::Visit;
        fn_ = &fn;
        dfs(0, VertexSet{}, VertexSet{});
    }

private:
    enum class Mode { Optimize, Visit };

    bool dfs(Vertex i, VertexSet b2, VertexSet cover) {
        if (++nodes_ > budget_.max_search_nodes) {
            throw ResourceError("search exceeded max_search_nodes=" + std::to_string(budget_.max_search_nodes));
        }
        const VertexSet undecided = VertexSet::full(n_) - VertexSet::full(i);
        const VertexSet uncovered = g_.vertices() - cover;
        const VertexSet stuck = uncovered - g_.closed_neighbors(undecided);
        const int lb = 2 * b2.size() + stuck.size();
        if (mode_ == Mode::Optimize ? lb >= best_ : lb > best_) return true;
        if (i == n_) {
            const int w = 2 * b2.size() + uncovered.size();
            if (mode_ == Mode::Optimize) {
                best_ = std::min(best_, w);
                return true;
            }
            if (w != best_) return true;
            return (*fn_)(RomanAssignment{uncovered, b2});
        }
        if (mode_ == Mode::Optimize) {
            // the no-more-B2 completion is always feasible
            best_ = std::min(best_, 2 * b2.size() + uncovered.size());
        }
        if (!dfs(i + 1, b2 | VertexSet::single(i), cover | g_.closed_neighbors(i))) return false;
        return dfs(i + 1, b2, cover);
    }

    const Graph& g_;
    int n_;
    const Budget& budget_;
    long long nodes_ = 0;
    int best_ = 0;
    Mode mode_ = Mode::Optimize;
    const std::function<bool(const RomanAssignment&)>* fn_ = nullptr;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Public per-parameter solvers.

inline SolveResult roman_domination(const Graph& g, const Budget& budget = {}) {
    detail::require_feasible(g, Parameter::Roman);
    detail::RomanSearch search(g, budget);
    const int value = search.optimum();
    std::optional<RomanAssignment> witness;
    search.visit(value, [&](const RomanAssignment& f) {
        witness = f;
        return false;
    });
    return {Parameter::Roman, value, *witness, std::nullopt};
}

inline SolveResult solve(const Graph& g, Parameter kind, const Budget& budget = {}) {
    if (kind == Parameter::Roman) return roman_domination(g, budget);
    auto opt = detail::optimize_sets(g, kind, budget);
    return {kind, opt.value, opt.witness, std::nullopt};
}

inline SolveResult gamma(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::Domination, b); }
inline SolveResult alpha(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::Independence, b); }
inline SolveResult i_number(const Graph& g, const Budget& b = {}) {
    return solve(g, Parameter::IndependentDomination, b);
}
inline SolveResult gamma_R(const Graph& g, const Budget& b = {}) { return roman_domination(g, b); }
inline SolveResult gamma_c(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::Connected, b); }
inline SolveResult gamma_con(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::Convex, b); }
inline SolveResult gamma_w(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::WeaklyConnected, b); }
inline SolveResult gamma_sp(const Graph& g, const Budget& b = {}) { return solve(g, Parameter::Super, b); }

/// Shorthand when only the number is needed.
inline int value_of(const Graph& g, Parameter kind, const Budget& b = {}) { return solve(g, kind, b).value; }

/// Every optimal set (lexicographic order) of a set-valued parameter.
inline std::vector<VertexSet> enumerate_optimal_sets(const Graph& g, Parameter kind, const Budget& budget = {}) {
    if (kind == Parameter::Roman) throw InputError("use enumerate_optimal_roman for Roman domination");
    const int value = detail::optimize_sets(g, kind, budget).value;
    return detail::enumerate_sets_of_size(g, kind, value, budget);
}

/// Every minimum-weight Roman dominating function. Each has B1 forced by B2
/// (see RomanAssignment::forced), so enumerating B2 is complete.
inline std::vector<RomanAssignment> enumerate_optimal_roman(const Graph& g, const Budget& budget = {}) {
    detail::require_feasible(g, Parameter::Roman);
    detail::RomanSearch search(g, budget);
    const int value = search.optimum();
    std::vector<RomanAssignment> out;
    search.visit(value, [&](const RomanAssignment& f) {
        if (static_cast<long long>(out.size()) >= budget.enumeration_cap) {
            throw ResourceError("enumeration cap " + std::to_string(budget.enumeration_cap) + " exceeded",
                                static_cast<long long>(out.size()));
        }
        out.push_back(f);
        return true;
    });
    return out;
}

inline std::vector<Witness> enumerate_optimal(const Graph& g, Parameter kind, const Budget& budget = {}) {
    std::vector<Witness> out;
    if (kind == Parameter::Roman) {
        for (auto& f : enumerate_optimal_roman(g, budget)) out.emplace_back(f);
    } else {
        for (auto s : enumerate_optimal_sets(g, kind, budget)) out.emplace_back(s);
    }
    return out;
}

inline SolveResult solve_enumerating(const Graph& g, Parameter kind, const Budget& budget = {}) {
    SolveResult r = solve(g, kind, budget);
    r.optimal_count = static_cast<long long>(enumerate_optimal(g, kind, budget).size());
    return r;
}

// ---------------------------------------------------------------------------
// Root classification.

enum class Membership { InAll, InNone, InSome };

inline std::string_view membership_name(Membership m) {
    switch (m) {
        case Membership::InAll: return "IN_ALL";
        case Membership::InNone: return "IN_NONE";
        case Membership::InSome: return "IN_SOME";
    }
    return "?";
}

/// Where the root sits across all optimal sets. For Roman domination,
/// membership refers to f(v) > 0 and roman_values lists every f(v) attained
/// by a γ_R-function.
struct RootClassification {
    Parameter kind = Parameter::Domination;
    Membership membership = Membership::InSome;
    std::vector<int> roman_values;
    long long optimal_count = 0;
    int value = 0;

    bool roman_values_are(std::initializer_list<int> vs) const {
        return std::vector<int>(vs) == roman_values;
    }
    bool roman_attains(int label) const {
        return std::find(roman_values.begin(), roman_values.end(), label) != roman_values.end();
    }
};

inline Membership membership_from_counts(long long with, long long total) {
    if (with == total) return Membership::InAll;
    if (with == 0) return Membership::InNone;
    return Membership::InSome;
}

inline RootClassification classify_root(const RootedGraph& h, Parameter kind, const Budget& budget = {}) {
    RootClassification rc;
    rc.kind = kind;
    long long with = 0;
    if (kind == Parameter::Roman) {
        auto all = enumerate_optimal_roman(h.graph, budget);
        std::array<bool, 3> seen{};
        for (const auto& f : all) {
            const int label = f.value_at(h.root);
            seen[label] = true;
            if (label > 0) ++with;
        }
        for (int label = 0; label < 3; ++label)
            if (seen[label]) rc.roman_values.push_back(label);
        rc.optimal_count = static_cast<long long>(all.size());
        rc.value = all.front().weight();
    } else {
        auto all = enumerate_optimal_sets(h.graph, kind, budget);
        for (VertexSet s : all)
            if (s.contains(h.root)) ++with;
        rc.optimal_count = static_cast<long long>(all.size());
        rc.value = all.front().size();
    }
    rc.membership = membership_from_counts(with, rc.optimal_count);
    return rc;
}

}  // namespace rootdom
