#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rootdom/families.hpp"
#include "rootdom/product.hpp"
#include "rootdom/solvers.hpp"

namespace rootdom {

using Json = nlohmann::ordered_json;

enum class TheoremId {
    D1, D2,
    R1, R2, R3, R4, R5, R6,
    I1, I2, I3, I4, I5, I6, I7,
    C1, C2, C3, C4,
    X1, X2,
    W1, W2, W3,
    S1, S2, S3,
};

inline constexpr std::array<TheoremId, 27> kAllTheorems = {
    TheoremId::D1, TheoremId::D2, TheoremId::R1, TheoremId::R2, TheoremId::R3, TheoremId::R4, TheoremId::R5,
    TheoremId::R6, TheoremId::I1, TheoremId::I2, TheoremId::I3, TheoremId::I4, TheoremId::I5, TheoremId::I6,
    TheoremId::I7, TheoremId::C1, TheoremId::C2, TheoremId::C3, TheoremId::C4, TheoremId::X1, TheoremId::X2,
    TheoremId::W1, TheoremId::W2, TheoremId::W3, TheoremId::S1, TheoremId::S2, TheoremId::S3,
};

inline std::string_view theorem_name(TheoremId t) {
    static constexpr std::array<std::string_view, 27> names = {
        "D1", "D2", "R1", "R2", "R3", "R4", "R5", "R6", "I1", "I2", "I3", "I4", "I5", "I6",
        "I7", "C1", "C2", "C3", "C4", "X1", "X2", "W1", "W2", "W3", "S1", "S2", "S3",
    };
    return names[static_cast<std::size_t>(t)];
}

inline TheoremId parse_theorem(std::string_view name) {
    for (TheoremId t : kAllTheorems)
        if (theorem_name(t) == name) return t;
    throw InputError("unknown theorem id \"" + std::string(name) + "\"");
}

/// Claims whose failure makes a campaign exit with status 1. The remaining
/// ids are reported with their pass rate but do not affect the exit code.
inline bool default_must_hold(TheoremId t) {
    switch (t) {
        case TheoremId::D2: case TheoremId::R1: case TheoremId::R2: case TheoremId::R3: case TheoremId::R4:
        case TheoremId::I1: case TheoremId::I3: case TheoremId::I4: case TheoremId::I5:
        case TheoremId::C2: case TheoremId::C3:
            return true;
        default:
            return false;
    }
}

enum class Outcome { Pass, Fail, NotApplicable, Infeasible };

inline std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::NotApplicable: return "NOT_APPLICABLE";
        case Outcome::Infeasible: return "INFEASIBLE";
    }
    return "?";
}

inline Outcome parse_outcome(std::string_view s) {
    for (Outcome o : {Outcome::Pass, Outcome::Fail, Outcome::NotApplicable, Outcome::Infeasible})
        if (outcome_name(o) == s) return o;
    throw InputError("unknown outcome \"" + std::string(s) + "\"");
}

// --- JSON graph payloads ----------------------------------------------------

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw InputError("graph payload needs \"n\" and \"edges\"");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(j.at("n").get<int>(), edges);
}

inline Json set_to_json(VertexSet s) { return Json(s.to_vector()); }

inline Json witness_to_json(const Witness& w) {
    if (auto* s = std::get_if<VertexSet>(&w)) return set_to_json(*s);
    const auto& f = std::get<RomanAssignment>(w);
    return Json{{"B1", set_to_json(f.b1)}, {"B2", set_to_json(f.b2)}};
}

// --- instances and verdicts -------------------------------------------------

/// One (G, H, root) triple. Graph-level lemmas evaluate on H and ignore G.
struct Instance {
    Graph g;
    RootedGraph h;
    Json descriptor = Json::object();
};

struct Verdict {
    TheoremId theorem = TheoremId::D1;
    Json instance = Json::object();
    bool hypothesis_applicable = false;
    Outcome outcome = Outcome::NotApplicable;
    std::string branch;       // which clause of the claim was exercised, if any
    Json values = Json::object();
    Json recorded = Json::object();  // ungated side results
    Json witness = nullptr;   // re-runnable payload on FAIL
    std::string note;

    Json to_json() const {
        Json j;
        j["theorem"] = theorem_name(theorem);
        j["outcome"] = outcome_name(outcome);
        j["hypothesis_applicable"] = hypothesis_applicable;
        if (!branch.empty()) j["branch"] = branch;
        j["instance"] = instance;
        j["values"] = values;
        if (!recorded.empty()) j["recorded"] = recorded;
        if (!note.empty()) j["note"] = note;
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }
};

/// Self-contained replay payload: everything needed to re-run one check.
inline Json replay_payload(TheoremId t, const Instance& inst) {
    return Json{{"theorem", theorem_name(t)},
                {"g", graph_to_json(inst.g)},
                {"h", graph_to_json(inst.h.graph)},
                {"root", inst.h.root},
                {"descriptor", inst.descriptor}};
}

inline std::pair<TheoremId, Instance> instance_from_replay(const Json& j) {
    try {
        TheoremId t = parse_theorem(j.at("theorem").get<std::string>());
        Instance inst;
        inst.g = graph_from_json(j.at("g"));
        inst.h = RootedGraph(graph_from_json(j.at("h")), j.at("root").get<int>());
        if (j.contains("descriptor")) inst.descriptor = j.at("descriptor");
        return {t, std::move(inst)};
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed replay payload: ") + e.what());
    }
}

namespace detail {

/// Solves and records every quantity a check touches, so that a failing
/// verdict carries all computed optima.
class CheckContext {
public:
    CheckContext(const Instance& inst, const Budget& budget) : inst_(inst), budget_(budget) {}

    const Instance& instance() const { return inst_; }
    int n() const { return inst_.g.order(); }

    const RootedProduct& product() {
        if (!product_) product_ = rooted_product(inst_.g, inst_.h);
        return *product_;
    }

    int solve(const std::string& label, const Graph& g, Parameter kind) {
        const std::string key = label + "." + std::string(parameter_name(kind));
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        SolveResult r = rootdom::solve(g, kind, budget_);
        cache_[key] = r.value;
        values[key] = r.value;
        optima[key] = witness_to_json(r.witness);
        return r.value;
    }

    int G(Parameter k) { return solve("G", inst_.g, k); }
    int H(Parameter k) { return solve("H", inst_.h.graph, k); }
    int GH(Parameter k) { return solve("GH", product().product, k); }

    RootClassification classify(Parameter kind) {
        RootClassification rc = classify_root(inst_.h, kind, budget_);
        const std::string key = "H.root." + std::string(parameter_name(kind));
        values[key] = membership_name(rc.membership);
        if (kind == Parameter::Roman) values["H.root.roman_values"] = rc.roman_values;
        return rc;
    }

    void note(const std::string& key, Json v) { values[key] = std::move(v); }

    const Budget& budget() const { return budget_; }

    Json values = Json::object();
    Json optima = Json::object();

private:
    const Instance& inst_;
    const Budget& budget_;
    std::optional<RootedProduct> product_;
    std::map<std::string, int> cache_;
};

inline bool is_end_vertex(const Graph& g, Vertex v) { return g.degree(v) == 1; }

inline bool both_trees(const Instance& inst, int min_order) {
    return is_tree(inst.g) && is_tree(inst.h.graph) && inst.g.order() >= min_order &&
           inst.h.graph.order() >= min_order;
}

// Vertex v of H lies in all / none / some optimal sets, from one enumeration.
inline std::vector<Membership> memberships(const std::vector<VertexSet>& optimal, int n) {
    std::vector<Membership> out(n);
    for (Vertex v = 0; v < n; ++v) {
        long long with = 0;
        for (VertexSet s : optimal) with += s.contains(v);
        out[v] = membership_from_counts(with, static_cast<long long>(optimal.size()));
    }
    return out;
}

/// Canonical star S_{1,m} rooted at its center: returns m, or nullopt.
inline std::optional<int> as_center_rooted_star(const RootedGraph& h) {
    const Graph& g = h.graph;
    if (!is_tree(g) || g.order() < 3) return std::nullopt;
    if (g.degree(h.root) != g.order() - 1) return std::nullopt;
    return g.order() - 1;
}

/// S_{1,m} with one edge subdivided, rooted at the vertex at distance two
/// from the center: returns m, or nullopt.
inline std::optional<int> as_subdivided_star(const RootedGraph& h) {
    const Graph& g = h.graph;
    if (!is_tree(g) || g.order() < 4 || g.degree(h.root) != 1) return std::nullopt;
    Vertex s = g.neighbors(h.root).first();
    if (g.degree(s) != 2) return std::nullopt;
    Vertex c = (g.neighbors(s) - VertexSet::single(h.root)).first();
    const int m = g.degree(c);
    if (g.order() != m + 2) return std::nullopt;
    for (Vertex x : g.neighbors(c) - VertexSet::single(s))
        if (g.degree(x) != 1) return std::nullopt;
    return m;
}

inline bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace detail

/// Evaluates one theorem on one instance. Solver infeasibility becomes an
/// INFEASIBLE verdict; resource errors propagate.
inline Verdict check(TheoremId theorem, const Instance& inst, const Budget& budget = {}) {
    using detail::ceil_div;
    using P = Parameter;
    detail::CheckContext cx(inst, budget);
    Verdict v;
    v.theorem = theorem;
    v.instance = inst.descriptor;
    const Graph& Hg = inst.h.graph;
    const Vertex root = inst.h.root;
    const int n = inst.g.order();

    auto applicable = [&](bool holds) {
        v.hypothesis_applicable = true;
        v.outcome = holds ? Outcome::Pass : Outcome::Fail;
    };
    auto not_applicable = [&](std::string why) {
        v.hypothesis_applicable = false;
        v.outcome = Outcome::NotApplicable;
        v.note = std::move(why);
    };

    try {
        switch (theorem) {
            case TheoremId::D1: {
                auto rc = cx.classify(P::Domination);
                if (rc.membership == Membership::InSome) {
                    not_applicable("root lies in some but not all gamma(H)-sets");
                    break;
                }
                const int lhs = cx.GH(P::Domination);
                const int rhs = n * cx.H(P::Domination);
                cx.note("claim", rhs);
                applicable(lhs == rhs);
                break;
            }
            case TheoremId::D2: {
                const int val = cx.GH(P::Domination);
                const int gh = cx.H(P::Domination);
                const int a = n * gh;
                const int b = n * (gh - 1) + cx.G(P::Domination);
                cx.note("allowed", Json::array({a, b}));
                v.branch = val == a ? (val == b ? "both" : "n*gamma(H)") : "n*(gamma(H)-1)+gamma(G)";
                applicable(val == a || val == b);
                break;
            }
            case TheoremId::R1: {
                bool ok = true;
                auto side = [&](const char* label, const Graph& g) {
                    const int gm = cx.solve(label, g, P::Domination);
                    const int r = cx.solve(label, g, P::Roman);
                    ok = ok && gm <= r && r <= 2 * gm;
                };
                side("G", inst.g);
                side("H", Hg);
                side("GH", cx.product().product);
                applicable(ok);
                break;
            }
            case TheoremId::R2: {
                if (Hg.order() < 2) {
                    not_applicable("H needs at least two vertices");
                    break;
                }
                const int gr = cx.H(P::Roman);
                auto functions = enumerate_optimal_roman(Hg, budget);
                std::vector<int> deleted(Hg.order());
                for (Vertex x = 0; x < Hg.order(); ++x) deleted[x] = value_of(delete_vertex(Hg, x).graph, P::Roman, budget);
                cx.note("H-v.roman", deleted);
                cx.note("roman_functions", static_cast<long long>(functions.size()));
                bool ok = true;
                Json bad = Json::array();
                for (const auto& f : functions) {
                    for (Vertex x = 0; x < Hg.order(); ++x) {
                        const int d = deleted[x];
                        bool holds = true;
                        switch (f.value_at(x)) {
                            case 0: holds = gr - 1 <= d && d <= gr; break;
                            case 1: holds = d == gr - 1; break;
                            case 2: holds = gr - 1 <= d && d <= gr + Hg.degree(x) - 2; break;
                        }
                        if (!holds) {
                            ok = false;
                            bad.push_back({{"vertex", x}, {"function", witness_to_json(f)}});
                        }
                    }
                }
                if (!ok) cx.note("violations", bad);
                applicable(ok);
                break;
            }
            case TheoremId::R3: {
                const int gr = cx.H(P::Roman);
                auto functions = enumerate_optimal_roman(Hg, budget);
                VertexSet always_zero = Hg.vertices();
                for (const auto& f : functions) always_zero -= f.b1 | f.b2;
                cx.note("always_zero", set_to_json(always_zero));
                if (always_zero.empty() || Hg.order() < 2) {
                    not_applicable("no vertex has f(v)=0 in every gamma_R-function");
                    break;
                }
                bool ok = true;
                Json per = Json::object();
                for (Vertex x : always_zero) {
                    const int d = value_of(delete_vertex(Hg, x).graph, P::Roman, budget);
                    per[std::to_string(x)] = d;
                    ok = ok && d == gr;
                }
                cx.note("H-v.roman", per);
                applicable(ok);
                break;
            }
            case TheoremId::R4: {
                const int val = cx.GH(P::Roman);
                const int rh = cx.H(P::Roman);
                const int lo = n * (rh - 1) + cx.G(P::Domination);
                const int hi = n * rh;
                cx.note("bounds", Json::array({lo, hi}));
                if (val == lo) v.branch = "lower attained";
                else if (val == hi) v.branch = "upper attained";
                applicable(lo <= val && val <= hi);
                break;
            }
            case TheoremId::R5: {
                auto rc = cx.classify(P::Roman);
                if (rc.roman_values_are({0})) {
                    v.branch = "i";
                    const int claim = n * cx.H(P::Roman);
                    cx.note("claim", claim);
                    applicable(cx.GH(P::Roman) == claim);
                } else if (rc.roman_attains(1) && rc.roman_attains(2)) {
                    v.branch = "ii";
                    const int claim = n * (cx.H(P::Roman) - 1) + cx.G(P::Domination);
                    cx.note("claim", claim);
                    applicable(cx.GH(P::Roman) == claim);
                } else {
                    not_applicable("root labels neither always 0 nor include both 1 and 2");
                }
                break;
            }
            case TheoremId::R6: {
                auto rc = cx.classify(P::Roman);
                if (!rc.roman_values_are({1})) {
                    not_applicable("root is not labelled 1 by every gamma_R-function");
                    break;
                }
                const int claim = n * (cx.H(P::Roman) - 1) + cx.G(P::Roman);
                cx.note("claim", claim);
                applicable(cx.GH(P::Roman) == claim);
                break;
            }
            case TheoremId::I1: {
                const int a = cx.H(P::Independence);
                auto sets = enumerate_optimal_sets(Hg, P::Independence, budget);
                auto member = detail::memberships(sets, Hg.order());
                bool any = false, ok = true;
                Json per = Json::object();
                for (Vertex x = 0; x < Hg.order(); ++x) {
                    if (member[x] != Membership::InAll || Hg.order() < 2) continue;
                    any = true;
                    const int d = value_of(delete_vertex(Hg, x).graph, P::Independence, budget);
                    per[std::to_string(x)] = d;
                    ok = ok && a >= d + 1;
                }
                cx.note("H-v.alpha", per);
                if (!any) {
                    not_applicable("no vertex lies in every alpha(H)-set");
                    break;
                }
                applicable(ok);
                break;
            }
            case TheoremId::I2: {
                auto rc = cx.classify(P::Independence);
                const int ah = cx.H(P::Independence);
                int claim;
                if (rc.membership == Membership::InAll) {
                    v.branch = "ii";
                    claim = n * (ah - 1) + cx.G(P::Independence);
                } else {
                    v.branch = "i";
                    claim = n * ah;
                }
                cx.note("claim", claim);
                applicable(cx.GH(P::Independence) == claim);
                break;
            }
            case TheoremId::I3: {
                const int nh = Hg.order();
                const int ih = cx.H(P::IndependentDomination);
                std::vector<VertexSet> subsets;
                const VertexSet all = Hg.vertices();
                if (nh <= 10) {
                    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << nh) - 1; ++bits)
                        subsets.emplace_back(bits);
                } else {
                    Rng rng(mix64(static_cast<std::uint64_t>(nh) * 1000003ULL + Hg.size()));
                    for (int t = 0; t < 64; ++t) {
                        VertexSet a;
                        for (Vertex x = 0; x < nh; ++x)
                            if (rng.coin(0.3)) a.insert(x);
                        if (!a.empty() && a != all) subsets.push_back(a);
                    }
                }
                bool ok = true;
                Json bad = Json::array();
                for (VertexSet a : subsets) {
                    const int d = value_of(delete_vertices(Hg, a).graph, P::IndependentDomination, budget);
                    if (d < ih - a.size()) {
                        ok = false;
                        bad.push_back({{"A", set_to_json(a)}, {"i(H-A)", d}});
                    }
                }
                cx.note("subsets_checked", static_cast<long long>(subsets.size()));
                if (!ok) cx.note("violations", bad);
                if (subsets.empty()) {
                    not_applicable("H has no nonempty proper vertex subset");
                    break;
                }
                applicable(ok);
                break;
            }
            case TheoremId::I4: {
                const int ih = cx.H(P::IndependentDomination);
                auto sets = enumerate_optimal_sets(Hg, P::IndependentDomination, budget);
                auto member = detail::memberships(sets, Hg.order());
                bool any = false, ok = true;
                Json per = Json::object();
                for (Vertex x = 0; x < Hg.order(); ++x) {
                    if (member[x] != Membership::InNone) continue;
                    any = true;
                    const int d = value_of(delete_vertex(Hg, x).graph, P::IndependentDomination, budget);
                    per[std::to_string(x)] = d;
                    ok = ok && d == ih;
                }
                cx.note("H-v.i", per);
                if (!any) {
                    not_applicable("every vertex lies in some i(H)-set");
                    break;
                }
                applicable(ok);
                break;
            }
            case TheoremId::I5: {
                const int val = cx.GH(P::IndependentDomination);
                const int ih = cx.H(P::IndependentDomination);
                const int ag = cx.G(P::Independence);
                const int ihv = cx.solve("H-v", delete_vertex(Hg, root).graph, P::IndependentDomination);
                const int lo = n * (ih - 1) + cx.G(P::IndependentDomination);
                const int hi = ih * ag + ihv * (n - ag);
                cx.note("bounds", Json::array({lo, hi}));
                applicable(lo <= val && val <= hi);
                break;
            }
            case TheoremId::I6: {
                if (!detail::is_path_graph(inst.g)) {
                    not_applicable("G is not a path");
                    break;
                }
                int claim;
                if (auto m = detail::as_center_rooted_star(inst.h)) {
                    v.branch = "caterpillar";
                    claim = *m * n - ceil_div(n, 2) * (*m - 1);
                } else if (auto m2 = detail::as_subdivided_star(inst.h)) {
                    v.branch = "subdivided_star";
                    claim = n + ceil_div(n, 3);
                } else {
                    not_applicable("H is neither a center-rooted star nor a subdivided star rooted at distance two");
                    break;
                }
                cx.note("claim", claim);
                applicable(cx.GH(P::IndependentDomination) == claim);
                break;
            }
            case TheoremId::I7: {
                auto rc = cx.classify(P::IndependentDomination);
                const int ih = cx.H(P::IndependentDomination);
                if (rc.membership == Membership::InNone) {
                    v.branch = "i";
                    const int claim = n * ih;
                    cx.note("claim", claim);
                    applicable(cx.GH(P::IndependentDomination) == claim);
                } else if (rc.membership == Membership::InAll) {
                    v.branch = "ii";
                    auto sets = enumerate_optimal_sets(Hg, P::IndependentDomination, budget);
                    int pn_min = kMaxOrder, pn_max = 0;
                    for (VertexSet s : sets) {
                        const int size = private_neighbor_set(Hg, s, root).size();
                        pn_min = std::min(pn_min, size);
                        pn_max = std::max(pn_max, size);
                    }
                    const int ag = cx.G(P::Independence);
                    const int val = cx.GH(P::IndependentDomination);
                    const int bound_min = ag * ih + (n - ag) * (pn_min + ih - 1);
                    const int bound_max = ag * ih + (n - ag) * (pn_max + ih - 1);
                    cx.note("pn_min", pn_min);
                    cx.note("bound_min_reading", bound_min);
                    v.recorded = Json{{"pn_max", pn_max},
                                      {"bound_max_reading", bound_max},
                                      {"holds_max_reading", val <= bound_max}};
                    applicable(val <= bound_min);
                } else {
                    not_applicable("root lies in some but not all i(H)-sets");
                }
                break;
            }
            case TheoremId::C1:
            case TheoremId::X1: {
                const P kind = theorem == TheoremId::C1 ? P::Connected : P::Convex;
                const int val = cx.GH(kind);
                const int h = cx.H(kind);
                cx.note("allowed", Json::array({n * h, n * (h + 1)}));
                v.branch = val == n * h ? "n*value(H)" : "n*(value(H)+1)";
                applicable(val == n * h || val == n * (h + 1));
                break;
            }
            case TheoremId::C2: {
                if (!is_tree(Hg) || Hg.order() < 3) {
                    not_applicable("H is not a tree of order >= 3");
                    break;
                }
                const int claim = Hg.order() - leaves(Hg).size();
                cx.note("n-n1", claim);
                applicable(cx.H(P::Connected) == claim);
                break;
            }
            case TheoremId::C3: {
                if (!detail::both_trees(inst, 3)) {
                    not_applicable("factors are not both trees of order >= 3");
                    break;
                }
                const Graph& prod = cx.product().product;
                const int n1h = leaves(Hg).size();
                const int n1p = leaves(prod).size();
                const bool root_leaf = detail::is_end_vertex(Hg, root);
                const int expected = root_leaf ? n * (n1h - 1) : n * n1h;
                cx.note("product_is_tree", is_tree(prod));
                cx.note("n(GH)", prod.order());
                cx.note("n1(GH)", n1p);
                cx.note("expected_n1", expected);
                v.branch = root_leaf ? "root is a leaf" : "root is not a leaf";
                applicable(is_tree(prod) && prod.order() == n * Hg.order() && n1p == expected);
                break;
            }
            case TheoremId::C4:
            case TheoremId::X2: {
                if (!detail::both_trees(inst, 3)) {
                    not_applicable("factors are not both trees of order >= 3");
                    break;
                }
                const P kind = theorem == TheoremId::C4 ? P::Connected : P::Convex;
                const int val = cx.GH(kind);
                const int h = cx.H(kind);
                const bool end = detail::is_end_vertex(Hg, root);
                const bool equal_n_h = val == n * h;
                const bool equal_n_h1 = val == n * (h + 1);
                v.branch = end ? "root is an end vertex" : "root is not an end vertex";
                applicable(equal_n_h == !end && equal_n_h1 == end);
                break;
            }
            case TheoremId::W1: {
                const int val = cx.GH(P::WeaklyConnected);
                const int h = cx.H(P::WeaklyConnected);
                const int g = cx.G(P::WeaklyConnected);
                cx.note("allowed", Json::array({n * h, n * h + g}));
                applicable(val == n * h || val == n * h + g);
                break;
            }
            case TheoremId::W2: {
                if (!is_tree(Hg) || Hg.order() < 3) {
                    not_applicable("H is not a tree of order >= 3");
                    break;
                }
                const int core = Hg.order() - leaves(Hg).size();
                const int w = cx.H(P::WeaklyConnected);
                cx.note("n-n1", core);
                applicable(2 * w >= core + 1 && w <= core);
                break;
            }
            case TheoremId::W3: {
                if (!is_tree(inst.g) || !is_tree(Hg) || Hg.order() < 3) {
                    not_applicable("factors are not trees with n(H) >= 3");
                    break;
                }
                if (detail::is_end_vertex(Hg, root)) {
                    not_applicable("root is an end vertex of H");
                    break;
                }
                const int val = cx.GH(P::WeaklyConnected);
                const int h = cx.H(P::WeaklyConnected);
                const int n1g = leaves(inst.g).size();
                // first statement: (n1(G) h + 1)/2 <= val <= n1(G)(2h - 1)
                const bool first = 2 * val >= n1g * h + 1 && val <= n1g * (2 * h - 1);
                // second statement: (h n + 1)/2 <= val <= 2 n h
                const bool second = 2 * val >= h * n + 1 && val <= 2 * n * h;
                cx.note("first_bounds_hold", first);
                cx.note("second_bounds_hold", second);
                applicable(first && second);
                break;
            }
            case TheoremId::S1: {
                const int claim = n * cx.H(P::Super);
                cx.note("claim", claim);
                applicable(cx.GH(P::Super) == claim);
                break;
            }
            case TheoremId::S2: {
                if (!is_tree(Hg) || Hg.order() < 3) {
                    not_applicable("H is not a tree of order >= 3");
                    break;
                }
                const int sp = cx.H(P::Super);
                const int s = support_vertices(Hg).size();
                cx.note("n-s", Hg.order() - s);
                applicable(2 * sp >= Hg.order() && sp <= Hg.order() - s);
                break;
            }
            case TheoremId::S3: {
                if (!detail::both_trees(inst, 3)) {
                    not_applicable("factors are not both trees of order >= 3");
                    break;
                }
                const int sp = cx.GH(P::Super);
                const int s = support_vertices(Hg).size();
                const int lo = n * s;
                const int hi = n * (Hg.order() - s);
                cx.note("bounds", Json::array({lo, hi}));
                applicable(lo <= sp && sp <= hi);
                break;
            }
        }
    } catch (const InfeasibleError& e) {
        v.hypothesis_applicable = false;
        v.outcome = Outcome::Infeasible;
        v.note = e.what();
    }
    v.values = std::move(cx.values);
    if (v.outcome == Outcome::Fail) {
        v.witness = replay_payload(theorem, inst);
        v.witness["values"] = v.values;
        v.witness["optima"] = cx.optima;
        v.witness["outcome"] = outcome_name(v.outcome);
    }
    return v;
}

enum class ClosedFormFamily { Caterpillar, SubdividedStarProduct };

/// i(P_n ∘ S_{1,m}) with the center as root, or i(P_n ∘ subdivided S_{1,m})
/// rooted at distance two from the center, against its closed form.
inline Verdict closed_form_check(ClosedFormFamily family, int n, int m, const Budget& budget = {}) {
    if (n < 2 || m < 2) throw InputError("closed-form check needs n >= 2 and m >= 2");
    Instance inst;
    inst.g = generate({Family::Path, n}).graph;
    const Family hf = family == ClosedFormFamily::Caterpillar ? Family::Star : Family::SubdividedStar;
    inst.h = generate({hf, m}).rooted();
    inst.descriptor = Json{{"sweep", "closed_form"},
                           {"family", family == ClosedFormFamily::Caterpillar ? "caterpillar" : "subdivided_star"},
                           {"n", n},
                           {"m", m}};
    return check(TheoremId::I6, inst, budget);
}

}  // namespace rootdom
