#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootdom/campaign.hpp"
#include "rootdom/edge_list.hpp"
#include "rootdom/families.hpp"
#include "rootdom/harness.hpp"
#include "rootdom/product.hpp"
#include "rootdom/solvers.hpp"

namespace rootdom {

namespace cli_detail {

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << text;
    if (!out) throw InputError(path + ": write failed");
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline std::string witness_text(const Witness& w) {
    if (auto* s = std::get_if<VertexSet>(&w)) return s->to_string();
    const auto& f = std::get<RomanAssignment>(w);
    return "B1=" + f.b1.to_string() + " B2=" + f.b2.to_string();
}

struct SolveOptions {
    std::string param;
    std::string file;
    bool enumerate = false;
    std::optional<int> classify_root;
    std::string out;
    bool quiet = false;
    bool json = false;
};

inline int run_solve(const SolveOptions& o, std::ostream& out) {
    const Parameter kind = parse_parameter(o.param);
    const ParsedGraph parsed = read_edge_list_file(o.file);
    const Graph& g = parsed.graph;
    const Budget budget = Budget::from_environment();

    SolveResult r = solve(g, kind, budget);
    Json j;
    j["param"] = parameter_name(kind);
    j["file"] = o.file;
    j["value"] = r.value;
    j["witness"] = witness_to_json(r.witness);
    std::vector<Witness> all;
    if (o.enumerate) {
        all = enumerate_optimal(g, kind, budget);
        Json list = Json::array();
        for (const auto& w : all) list.push_back(witness_to_json(w));
        j["optimal_count"] = all.size();
        j["optimal"] = list;
    }
    std::optional<RootClassification> rc;
    if (o.classify_root) {
        rc = classify_root(RootedGraph(g, *o.classify_root), kind, budget);
        Json c{{"root", *o.classify_root}, {"membership", membership_name(rc->membership)}};
        if (kind == Parameter::Roman) c["roman_values"] = rc->roman_values;
        c["optimal_count"] = rc->optimal_count;
        j["classification"] = c;
    }

    if (!o.out.empty()) write_text_file(o.out, j.dump(2) + "\n");
    if (o.json) {
        out << j.dump(2) << '\n';
    } else if (!o.quiet) {
        out << parameter_name(kind) << " = " << r.value << '\n';
        out << "witness " << witness_text(r.witness) << '\n';
        if (o.enumerate) {
            out << "optimal " << all.size() << '\n';
            for (const auto& w : all) out << "  " << witness_text(w) << '\n';
        }
        if (rc) {
            out << "root " << *o.classify_root << ' ' << membership_name(rc->membership);
            if (kind == Parameter::Roman) {
                out << " roman_values {";
                for (std::size_t k = 0; k < rc->roman_values.size(); ++k)
                    out << (k ? "," : "") << rc->roman_values[k];
                out << '}';
            }
            out << '\n';
        }
    }
    return 0;
}

struct GenOptions {
    std::string family;
    std::optional<int> n, m;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string output;
    bool quiet = false;
};

inline int run_gen(const GenOptions& o, std::ostream& out) {
    FamilySpec spec;
    spec.family = parse_family(o.family);
    const bool star = spec.family == Family::Star || spec.family == Family::SubdividedStar;
    if (star) {
        if (!o.m) throw InputError("--family " + o.family + " needs --m (number of star leaves)");
        spec.size = *o.m;
    } else {
        if (!o.n) throw InputError("--family " + o.family + " needs --n");
        spec.size = *o.n;
    }
    spec.edge_probability = o.p;
    spec.seed = o.seed;
    const FamilyGraph fg = generate(spec);
    const std::string text = to_edge_list_string(fg.graph, fg.root);
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
        if (!o.quiet)
            out << "wrote " << o.output << " (" << fg.graph.order() << " vertices, " << fg.graph.size()
                << " edges)\n";
    }
    return 0;
}

struct ProductOptions {
    std::string g_file, h_file;
    std::optional<int> root;
    std::string output;
    std::string map;
    bool quiet = false;
};

inline int run_product(const ProductOptions& o, std::ostream& out) {
    const ParsedGraph g = read_edge_list_file(o.g_file);
    const ParsedGraph h = read_edge_list_file(o.h_file);
    std::optional<Vertex> root = o.root ? o.root : h.root;
    if (!root) throw InputError(o.h_file + ": no root given (use --root k or a '# root k' line)");
    if (*root < 0 || *root >= h.graph.order())
        throw InputError(o.h_file + ": root " + std::to_string(*root) + " out of range [0, " +
                         std::to_string(h.graph.order() - 1) + "]");
    const RootedProduct rp = rooted_product(g.graph, RootedGraph(h.graph, *root));
    const std::string text = to_edge_list_string(rp.product);
    Json map{{"base", rp.base_map}, {"copies", rp.copy_map}};

    std::string map_path = o.map;
    if (map_path.empty() && !o.output.empty()) map_path = o.output + ".map.json";
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
    }
    if (!map_path.empty()) write_text_file(map_path, map.dump() + "\n");
    if (!o.quiet && !o.output.empty()) {
        out << "wrote " << o.output << " (" << rp.product.order() << " vertices, " << rp.product.size()
            << " edges)";
        if (!map_path.empty()) out << ", map " << map_path;
        out << '\n';
    }
    return 0;
}

inline void print_summary(const CampaignReport& report, std::ostream& out) {
    for (const auto& r : report.theorems) {
        out << theorem_name(r.theorem) << (r.must_hold ? " [must-hold]  " : " [paper-claim] ") << r.pass
            << " PASS, " << r.fail << " FAIL, " << r.not_applicable << " N/A, " << r.infeasible << " INFEASIBLE";
        if (r.errors) out << ", " << r.errors << " ERROR";
        const long long applicable = r.pass + r.fail;
        if (applicable > 0) {
            std::ostringstream rate;
            rate.setf(std::ios::fixed);
            rate.precision(1);
            rate << 100.0 * static_cast<double>(r.pass) / static_cast<double>(applicable);
            out << " (pass rate " << rate.str() << "%)";
        }
        for (const auto& [branch, counts] : r.branches) {
            out << " " << branch << ":";
            bool first = true;
            for (const auto& [o, k] : counts) {
                out << (first ? "" : "/") << o << "=" << k;
                first = false;
            }
        }
        out << '\n';
    }
}

inline int finish_campaign(const CampaignReport& report, const std::string& out_path, const std::string& witness_dir,
                           bool quiet, std::ostream& out) {
    if (!out_path.empty()) write_text_file(out_path, report.to_json().dump(2) + "\n");
    std::vector<std::string> written;
    if (!witness_dir.empty()) written = write_witness_files(report, witness_dir);
    if (!quiet) {
        print_summary(report, out);
        for (const auto& p : written) out << "witness " << p << '\n';
    }
    return report.exit_code();
}

struct VerifyOptions {
    std::string theorem;
    int trials = 200;
    std::uint64_t seed = 42;
    int max_g = 5;
    int max_h = 4;
    int jobs = 1;
    std::string replay;
    std::string witness_dir;
    std::string out;
    bool quiet = false;
};

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
    const Budget budget = Budget::from_environment();
    if (!o.replay.empty()) {
        auto [theorem, inst] = instance_from_replay(read_json_file(o.replay));
        if (!o.theorem.empty() && parse_theorem(o.theorem) != theorem)
            throw InputError(o.replay + ": replay file is for " + std::string(theorem_name(theorem)) +
                             ", not " + o.theorem);
        const Verdict v = check(theorem, inst, budget);
        if (!o.out.empty()) write_text_file(o.out, v.to_json().dump(2) + "\n");
        if (!o.quiet) {
            out << theorem_name(theorem) << ' ' << outcome_name(v.outcome);
            if (!v.branch.empty()) out << " branch " << v.branch;
            out << ' ' << v.values.dump() << '\n';
        }
        return v.outcome == Outcome::Fail && default_must_hold(theorem) ? 1 : 0;
    }
    if (o.theorem.empty()) throw InputError("verify needs --theorem ID or --replay FILE");
    CampaignConfig cfg;
    cfg.theorems = {parse_theorem(o.theorem)};
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.max_g = o.max_g;
    cfg.max_h = o.max_h;
    cfg.product_cap = std::max(cfg.product_cap, o.max_g * o.max_h);
    cfg.jobs = o.jobs;
    cfg.budget = budget;
    return finish_campaign(run_campaign(cfg), o.out, o.witness_dir, o.quiet, out);
}

struct CampaignOptions {
    std::string config;
    std::string out;
    std::string witness_dir;
    std::optional<int> jobs;
    bool quiet = false;
};

inline int run_campaign_command(const CampaignOptions& o, std::ostream& out) {
    CampaignConfig cfg;
    Json raw = Json::object();
    if (!o.config.empty()) {
        raw = read_json_file(o.config);
        try {
            cfg = CampaignConfig::from_json(raw);
        } catch (const InputError& e) {
            throw InputError(o.config + ": " + e.what());
        }
    }
    if (!raw.is_object() || !raw.contains("max_scan_order"))
        cfg.budget.max_scan_order = Budget::from_environment().max_scan_order;
    if (o.jobs) cfg.jobs = *o.jobs;
    return finish_campaign(run_campaign(cfg), o.out, o.witness_dir, o.quiet, out);
}

}  // namespace cli_detail

/// Parses args (without the program name) and dispatches. Exit codes: 0 clean,
/// 1 must-hold theorem failure, 2 usage, input, resource or config error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Rooted product graphs and their domination parameters.", "rootdom"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Compute one domination parameter of a graph file");
    solve_cmd->add_option("--param", so.param, "gamma|alpha|i|roman|connected|convex|weakly|super")->required();
    solve_cmd->add_option("file", so.file, "Edge-list file")->required();
    solve_cmd->add_flag("--enumerate", so.enumerate, "List every optimal set");
    solve_cmd->add_option("--classify-root", so.classify_root, "Report IN_ALL/IN_NONE/IN_SOME for vertex k");
    solve_cmd->add_option("--out", so.out, "Write the result as JSON");
    solve_cmd->add_flag("--json", so.json, "Print JSON instead of the text summary");
    solve_cmd->add_flag("-q,--quiet", so.quiet, "Suppress the text summary");

    GenOptions go;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph from a family");
    gen_cmd->add_option("--family", go.family,
                        "path|cycle|star|subdivided_star|complete|empty|random_tree|random_connected")
        ->required();
    gen_cmd->add_option("--n", go.n, "Order (all families except the stars)");
    gen_cmd->add_option("--m", go.m, "Number of star leaves (star, subdivided_star)");
    gen_cmd->add_option("--p", go.p, "Edge probability (random_connected)")->capture_default_str();
    gen_cmd->add_option("--seed", go.seed, "Seed for the random families")->capture_default_str();
    gen_cmd->add_option("-o,--output", go.output, "Output file (default: standard output)");
    gen_cmd->add_flag("-q,--quiet", go.quiet, "Suppress the text summary");

    ProductOptions po;
    auto* product_cmd = app.add_subcommand("product", "Build the rooted product G∘H");
    product_cmd->add_option("G", po.g_file, "Edge-list file for G")->required();
    product_cmd->add_option("H", po.h_file, "Edge-list file for H")->required();
    product_cmd->add_option("--root", po.root, "Root vertex of H (default: the file's '# root k' line)");
    product_cmd->add_option("-o,--output", po.output, "Output edge-list file (default: standard output)");
    product_cmd->add_option("--map", po.map, "Vertex map JSON (default: OUTPUT.map.json)");
    product_cmd->add_flag("-q,--quiet", po.quiet, "Suppress the text summary");

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Check one theorem on seeded random instances");
    verify_cmd->add_option("--theorem", vo.theorem, "Theorem id, e.g. D2");
    verify_cmd->add_option("--trials", vo.trials, "Number of trials")->capture_default_str();
    verify_cmd->add_option("--seed", vo.seed, "Master seed")->capture_default_str();
    verify_cmd->add_option("--max-g", vo.max_g, "Largest order of G")->capture_default_str();
    verify_cmd->add_option("--max-h", vo.max_h, "Largest order of H")->capture_default_str();
    verify_cmd->add_option("--jobs", vo.jobs, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--replay", vo.replay, "Re-run a witness file written by --witness-dir");
    verify_cmd->add_option("--witness-dir", vo.witness_dir, "Write one replay file per FAIL");
    verify_cmd->add_option("--out", vo.out, "Write the report as JSON");
    verify_cmd->add_flag("-q,--quiet", vo.quiet, "Suppress the text summary");

    CampaignOptions co;
    auto* campaign_cmd = app.add_subcommand("campaign", "Run every configured theorem check");
    campaign_cmd->add_option("--config", co.config, "Campaign JSON (default: built-in defaults)");
    campaign_cmd->add_option("--out", co.out, "Write the report as JSON");
    campaign_cmd->add_option("--witness-dir", co.witness_dir, "Write one replay file per FAIL");
    campaign_cmd->add_option("--jobs", co.jobs, "Worker threads (overrides the config)");
    campaign_cmd->add_flag("-q,--quiet", co.quiet, "Suppress the text summary");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "rootdom: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*solve_cmd) return run_solve(so, out);
        if (*gen_cmd) return run_gen(go, out);
        if (*product_cmd) return run_product(po, out);
        if (*verify_cmd) return run_verify(vo, out);
        if (*campaign_cmd) return run_campaign_command(co, out);
    } catch (const Error& e) {
        err << "rootdom: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "rootdom: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace rootdom
