#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "rootdom/harness.hpp"

namespace rootdom {

/// How instances for a theorem are drawn.
enum class Sweep {
    Product,     // random (G, H, root) with n(G) <= max_g, n(H) <= max_h
    Deletion,    // graph-level lemma on a random connected H, n(H) <= max_deletion
    Tree,        // single random tree H, 3 <= n(H) <= max_tree
    TreePair,    // random trees G, H with orders in [tree_min, tree_max], every root of H
    ClosedForm,  // the P_n ∘ star grids, n in [2, i6_max_n], m in [2, i6_max_m]
};

inline Sweep sweep_of(TheoremId t) {
    switch (t) {
        case TheoremId::R2: case TheoremId::R3: case TheoremId::I1: case TheoremId::I3: case TheoremId::I4:
            return Sweep::Deletion;
        case TheoremId::C2: case TheoremId::W2: case TheoremId::S2:
            return Sweep::Tree;
        case TheoremId::C3: case TheoremId::C4: case TheoremId::X2: case TheoremId::W3: case TheoremId::S3:
            return Sweep::TreePair;
        case TheoremId::I6:
            return Sweep::ClosedForm;
        default:
            return Sweep::Product;
    }
}

inline std::string_view sweep_name(Sweep s) {
    switch (s) {
        case Sweep::Product: return "product";
        case Sweep::Deletion: return "deletion";
        case Sweep::Tree: return "tree";
        case Sweep::TreePair: return "tree_pair";
        case Sweep::ClosedForm: return "closed_form";
    }
    return "?";
}

struct CampaignConfig {
    std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
    int trials = 200;
    std::uint64_t seed = 42;
    int max_g = 5;
    int max_h = 4;
    int max_deletion = 8;
    int max_tree = 10;
    int tree_min = 3;
    int tree_max = 6;
    int i6_max_n = 6;
    int i6_max_m = 4;
    int product_cap = 20;
    int jobs = 1;
    std::set<TheoremId> must_hold = default_set();
    Budget budget = {};

    static std::set<TheoremId> default_set() {
        std::set<TheoremId> s;
        for (TheoremId t : kAllTheorems)
            if (default_must_hold(t)) s.insert(t);
        return s;
    }

    void validate() const {
        auto fail = [](const std::string& m) { throw InputError("campaign config: " + m); };
        if (trials < 0) fail("trials must be >= 0");
        if (max_g < 2 || max_h < 2) fail("max_g and max_h must be >= 2");
        if (max_g * max_h > product_cap) fail("max_g * max_h exceeds product_cap");
        if (max_deletion < 2 || max_tree < 3) fail("max_deletion >= 2 and max_tree >= 3 required");
        if (tree_min < 3 || tree_max < tree_min) fail("need 3 <= tree_min <= tree_max");
        if (tree_max * tree_max > kMaxOrder) fail("tree_max^2 exceeds the supported graph order");
        if (i6_max_n < 2 || i6_max_m < 2) fail("i6 grid bounds must be >= 2");
        if (jobs < 1) fail("jobs must be >= 1");
    }

    Json to_json() const {
        Json ids = Json::array();
        for (TheoremId t : theorems) ids.push_back(theorem_name(t));
        Json mh = Json::array();
        for (TheoremId t : must_hold) mh.push_back(theorem_name(t));
        return Json{{"theorems", ids},       {"trials", trials},       {"seed", seed},
                    {"max_g", max_g},        {"max_h", max_h},         {"max_deletion", max_deletion},
                    {"max_tree", max_tree},  {"tree_min", tree_min},   {"tree_max", tree_max},
                    {"i6_max_n", i6_max_n},  {"i6_max_m", i6_max_m},   {"product_cap", product_cap},
                    {"must_hold", mh},       {"max_scan_order", budget.max_scan_order}};
    }

    /// Missing keys keep their defaults. `jobs` is an execution setting and is
    /// not echoed into reports.
    static CampaignConfig from_json(const Json& j) {
        CampaignConfig c;
        try {
            if (!j.is_object()) throw InputError("campaign config must be a JSON object");
            static const std::set<std::string> known = {
                "theorems", "trials",   "seed",     "max_g",    "max_h",       "max_deletion",
                "max_tree", "tree_min", "tree_max", "i6_max_n", "i6_max_m",    "product_cap",
                "jobs",     "must_hold", "max_scan_order", "max_search_nodes", "enumeration_cap"};
            for (const auto& [key, _] : j.items())
                if (!known.count(key)) throw InputError("campaign config: unknown key \"" + key + "\"");
            if (j.contains("theorems")) {
                c.theorems.clear();
                for (const auto& t : j.at("theorems")) c.theorems.push_back(parse_theorem(t.get<std::string>()));
            }
            if (j.contains("must_hold")) {
                c.must_hold.clear();
                for (const auto& t : j.at("must_hold")) c.must_hold.insert(parse_theorem(t.get<std::string>()));
            }
            auto get_int = [&](const char* key, int& out) {
                if (j.contains(key)) out = j.at(key).get<int>();
            };
            get_int("trials", c.trials);
            get_int("max_g", c.max_g);
            get_int("max_h", c.max_h);
            get_int("max_deletion", c.max_deletion);
            get_int("max_tree", c.max_tree);
            get_int("tree_min", c.tree_min);
            get_int("tree_max", c.tree_max);
            get_int("i6_max_n", c.i6_max_n);
            get_int("i6_max_m", c.i6_max_m);
            get_int("product_cap", c.product_cap);
            get_int("jobs", c.jobs);
            get_int("max_scan_order", c.budget.max_scan_order);
            if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("max_search_nodes")) c.budget.max_search_nodes = j.at("max_search_nodes").get<long long>();
            if (j.contains("enumeration_cap")) c.budget.enumeration_cap = j.at("enumeration_cap").get<long long>();
        } catch (const Json::exception& e) {
            throw InputError(std::string("campaign config: ") + e.what());
        }
        c.validate();
        return c;
    }
};

namespace detail {

inline Json spec_json(const FamilySpec& s) {
    Json j{{"family", family_name(s.family)}, {"size", s.size}};
    if (s.family == Family::RandomTree || s.family == Family::RandomConnected) j["seed"] = s.seed;
    if (s.family == Family::RandomConnected) j["p"] = s.edge_probability;
    return j;
}

// Draws a family spec of the requested order from a pool; families that
// cannot realise that order fall back to a path (or a random tree).
inline FamilySpec draw_spec(Family f, int order, Rng& rng, std::uint64_t seed) {
    static constexpr double kProbabilities[] = {0.3, 0.5, 0.7};
    FamilySpec s;
    s.family = f;
    s.size = order;
    s.seed = seed;
    switch (f) {
        case Family::Cycle:
            if (order < 3) s.family = Family::Path;
            break;
        case Family::Star:
            s.size = order - 1;
            if (s.size < 2) {
                s.family = Family::Path;
                s.size = order;
            }
            break;
        case Family::SubdividedStar:
            s.size = order - 2;
            if (s.size < 2) {
                s.family = Family::Path;
                s.size = order;
            }
            break;
        case Family::RandomConnected:
            s.edge_probability = kProbabilities[rng.uniform(0, 2)];
            break;
        default:
            break;
    }
    return s;
}

inline int order_of(const FamilySpec& s) {
    switch (s.family) {
        case Family::Star: return s.size + 1;
        case Family::SubdividedStar: return s.size + 2;
        default: return s.size;
    }
}

struct Job {
    TheoremId theorem;
    int trial;
};

inline constexpr Family kBasePool[] = {Family::Path,     Family::Cycle,      Family::Star,
                                       Family::Complete, Family::RandomTree, Family::RandomConnected};

// K2 and P3 lead the pool so every Roman branch is represented early.
struct HChoice {
    Family family;
    int fixed_order;  // 0 = draw
};
inline constexpr HChoice kRootedPool[] = {
    {Family::Complete, 2},        {Family::Path, 3},   {Family::Star, 0},       {Family::Empty, 0},
    {Family::RandomTree, 0},      {Family::Cycle, 0},  {Family::Complete, 0},   {Family::Path, 0},
    {Family::SubdividedStar, 0},  {Family::RandomConnected, 0},
};

inline constexpr Family kDeletionPool[] = {Family::RandomConnected, Family::RandomTree, Family::Cycle,
                                           Family::Star,            Family::Complete,   Family::Path};

/// The instances of one (theorem, trial) job. Deterministic in (seed, theorem, trial).
inline std::vector<Instance> instances_for(const CampaignConfig& cfg, TheoremId t, int trial) {
    const std::uint64_t job_seed = split_seed(split_seed(cfg.seed, static_cast<std::uint64_t>(t)), trial);
    Rng rng(job_seed);
    std::vector<Instance> out;
    Json base{{"sweep", sweep_name(sweep_of(t))}, {"trial", trial}, {"seed", job_seed}};
    auto unused_g = [] { return generate({Family::Path, 2}).graph; };

    switch (sweep_of(t)) {
        case Sweep::Product: {
            const Family gf = kBasePool[trial % std::size(kBasePool)];
            const HChoice hc = kRootedPool[(trial / std::size(kBasePool) + trial) % std::size(kRootedPool)];
            const int ng = rng.uniform(2, cfg.max_g);
            const int nh = hc.fixed_order ? hc.fixed_order : rng.uniform(2, cfg.max_h);
            FamilySpec gs = draw_spec(gf, ng, rng, split_seed(job_seed, 1));
            FamilySpec hs = draw_spec(hc.family, nh, rng, split_seed(job_seed, 2));
            Instance inst;
            inst.g = generate(gs).graph;
            Graph h = generate(hs).graph;
            const Vertex root = rng.uniform(0, h.order() - 1);
            inst.h = RootedGraph(h, root);
            inst.descriptor = base;
            inst.descriptor["g"] = spec_json(gs);
            inst.descriptor["h"] = spec_json(hs);
            inst.descriptor["root"] = root;
            out.push_back(std::move(inst));
            break;
        }
        case Sweep::Deletion: {
            const Family hf = kDeletionPool[trial % std::size(kDeletionPool)];
            const int nh = rng.uniform(3, cfg.max_deletion);
            FamilySpec hs = draw_spec(hf, nh, rng, split_seed(job_seed, 2));
            Instance inst;
            inst.g = unused_g();
            inst.h = RootedGraph(generate(hs).graph, 0);
            inst.descriptor = base;
            inst.descriptor["h"] = spec_json(hs);
            out.push_back(std::move(inst));
            break;
        }
        case Sweep::Tree: {
            FamilySpec hs{Family::RandomTree, rng.uniform(3, cfg.max_tree), 0.5, split_seed(job_seed, 2)};
            Instance inst;
            inst.g = unused_g();
            inst.h = RootedGraph(generate(hs).graph, 0);
            inst.descriptor = base;
            inst.descriptor["h"] = spec_json(hs);
            out.push_back(std::move(inst));
            break;
        }
        case Sweep::TreePair: {
            FamilySpec gs{Family::RandomTree, rng.uniform(cfg.tree_min, cfg.tree_max), 0.5, split_seed(job_seed, 1)};
            FamilySpec hs{Family::RandomTree, rng.uniform(cfg.tree_min, cfg.tree_max), 0.5, split_seed(job_seed, 2)};
            Graph g = generate(gs).graph;
            Graph h = generate(hs).graph;
            for (const RootedGraph& rh : all_roots(h)) {
                Instance inst;
                inst.g = g;
                inst.h = rh;
                inst.descriptor = base;
                inst.descriptor["g"] = spec_json(gs);
                inst.descriptor["h"] = spec_json(hs);
                inst.descriptor["root"] = rh.root;
                out.push_back(std::move(inst));
            }
            break;
        }
        case Sweep::ClosedForm:
            break;  // handled by closed_form_instances
    }
    return out;
}

inline std::vector<Instance> closed_form_instances(const CampaignConfig& cfg) {
    std::vector<Instance> out;
    for (Family hf : {Family::Star, Family::SubdividedStar}) {
        for (int n = 2; n <= cfg.i6_max_n; ++n) {
            for (int m = 2; m <= cfg.i6_max_m; ++m) {
                Instance inst;
                inst.g = generate({Family::Path, n}).graph;
                inst.h = generate({hf, m}).rooted();
                inst.descriptor = Json{{"sweep", "closed_form"},
                                       {"family", hf == Family::Star ? "caterpillar" : "subdivided_star"},
                                       {"n", n},
                                       {"m", m}};
                out.push_back(std::move(inst));
            }
        }
    }
    return out;
}

}  // namespace detail

struct TheoremReport {
    TheoremId theorem = TheoremId::D1;
    bool must_hold = false;
    int trials = 0;
    long long instances = 0, pass = 0, fail = 0, not_applicable = 0, infeasible = 0, errors = 0;
    std::map<std::string, std::map<std::string, long long>> branches;  // branch -> outcome -> count
    Json recorded = Json::object();
    std::vector<Verdict> failures;
    std::vector<Json> error_messages;

    Json to_json() const {
        Json j;
        j["theorem"] = theorem_name(theorem);
        j["must_hold"] = must_hold;
        j["trials"] = trials;
        j["instances"] = instances;
        j["pass"] = pass;
        j["fail"] = fail;
        j["not_applicable"] = not_applicable;
        j["infeasible"] = infeasible;
        j["errors"] = errors;
        const long long applicable = pass + fail;
        j["pass_rate"] = applicable == 0 ? Json(nullptr) : Json(static_cast<double>(pass) / applicable);
        Json br = Json::object();
        for (const auto& [name, counts] : branches) {
            Json c = Json::object();
            for (const auto& [o, k] : counts) c[o] = k;
            br[name] = c;
        }
        j["branches"] = br;
        if (!recorded.empty()) j["recorded"] = recorded;
        Json fs = Json::array();
        for (const auto& f : failures)
            fs.push_back(Json{{"instance", f.instance}, {"values", f.values}, {"witness", f.witness}});
        j["failures"] = fs;
        if (!error_messages.empty()) j["error_messages"] = error_messages;
        return j;
    }
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<TheoremReport> theorems;
    double elapsed_seconds = 0.0;

    bool must_hold_failed() const {
        return std::any_of(theorems.begin(), theorems.end(),
                           [](const TheoremReport& r) { return r.must_hold && r.fail > 0; });
    }

    int exit_code() const { return must_hold_failed() ? 1 : 0; }

    /// Everything except "metadata" is a deterministic function of the config.
    Json to_json() const {
        Json results = Json::array();
        long long must_fail = 0, claim_fail = 0;
        for (const auto& r : theorems) {
            results.push_back(r.to_json());
            (r.must_hold ? must_fail : claim_fail) += r.fail;
        }
        return Json{{"metadata", {{"tool", "rootdom"}, {"elapsed_seconds", elapsed_seconds}}},
                    {"config", config.to_json()},
                    {"results", results},
                    {"summary", {{"must_hold_failures", must_fail}, {"paper_claim_failures", claim_fail}}}};
    }
};

inline void accumulate(TheoremReport& r, const Verdict& v) {
    ++r.instances;
    switch (v.outcome) {
        case Outcome::Pass: ++r.pass; break;
        case Outcome::Fail: ++r.fail; r.failures.push_back(v); break;
        case Outcome::NotApplicable: ++r.not_applicable; break;
        case Outcome::Infeasible: ++r.infeasible; break;
    }
    if (!v.branch.empty()) ++r.branches[v.branch][std::string(outcome_name(v.outcome))];
    if (v.theorem == TheoremId::I7 && v.recorded.contains("holds_max_reading")) {
        auto& rec = r.recorded;
        if (!rec.contains("max_reading_checked")) {
            rec["max_reading_checked"] = 0;
            rec["max_reading_failures"] = 0;
        }
        rec["max_reading_checked"] = rec["max_reading_checked"].get<long long>() + 1;
        if (!v.recorded["holds_max_reading"].get<bool>())
            rec["max_reading_failures"] = rec["max_reading_failures"].get<long long>() + 1;
    }
}

/// Runs every (theorem, trial) job on a pool of cfg.jobs workers. Results are
/// stored per job slot, so the report does not depend on scheduling.
inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    struct Slot {
        TheoremId theorem;
        std::vector<Instance> instances;
        std::vector<Verdict> verdicts;
        std::vector<std::string> errors;
    };
    std::vector<Slot> slots;
    for (TheoremId t : cfg.theorems) {
        if (sweep_of(t) == Sweep::ClosedForm) {
            for (auto& inst : detail::closed_form_instances(cfg)) slots.push_back({t, {std::move(inst)}, {}, {}});
        } else {
            for (int trial = 0; trial < cfg.trials; ++trial)
                slots.push_back({t, detail::instances_for(cfg, t, trial), {}, {}});
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < slots.size(); i = next++) {
            Slot& s = slots[i];
            for (const Instance& inst : s.instances) {
                try {
                    s.verdicts.push_back(check(s.theorem, inst, cfg.budget));
                } catch (const Error& e) {
                    s.errors.push_back(e.what());
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(1, slots.size())));
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    CampaignReport report;
    report.config = cfg;
    for (TheoremId t : cfg.theorems) {
        TheoremReport r;
        r.theorem = t;
        r.must_hold = cfg.must_hold.count(t) > 0;
        r.trials = sweep_of(t) == Sweep::ClosedForm ? 0 : cfg.trials;
        for (const Slot& s : slots) {
            if (s.theorem != t) continue;
            if (sweep_of(t) == Sweep::ClosedForm) ++r.trials;
            for (const Verdict& v : s.verdicts) accumulate(r, v);
            for (const auto& e : s.errors) {
                ++r.errors;
                r.error_messages.push_back(e);
            }
        }
        report.theorems.push_back(std::move(r));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Writes one standalone replay file per FAIL; returns the paths written.
inline std::vector<std::string> write_witness_files(const CampaignReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (const auto& r : report.theorems) {
        int k = 0;
        for (const auto& f : r.failures) {
            const auto path = (std::filesystem::path(dir) /
                               (std::string(theorem_name(r.theorem)) + "_fail_" + std::to_string(k++) + ".json"))
                                  .string();
            std::ofstream out(path);
            if (!out) throw InputError(path + ": cannot write witness file");
            out << f.witness.dump(2) << '\n';
            paths.push_back(path);
        }
    }
    return paths;
}

}  // namespace rootdom
