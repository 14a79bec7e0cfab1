#pragma once

// Shared text format:
//   n m
//   u v        (m lines, 0-based ids)
// '#' starts a comment, blank lines are ignored. Rooted graphs carry a
// trailing "# root k" comment line.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rootdom/graph.hpp"

namespace rootdom {

struct ParsedGraph {
    Graph graph;
    std::optional<Vertex> root;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_fail(const std::string& source, int line, const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace detail

inline ParsedGraph parse_edge_list(std::istream& in, const std::string& source = "<input>") {
    ParsedGraph out;
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string body = raw;
        std::string comment;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            body = raw.substr(0, hash);
            comment = detail::trim(raw.substr(hash + 1));
        }
        if (comment.rfind("root", 0) == 0) {
            std::istringstream cs(comment.substr(4));
            long long r;
            std::string extra;
            if (!(cs >> r) || (cs >> extra)) detail::parse_fail(source, line_no, "malformed root annotation");
            if (!header || r < 0 || r >= header->first) {
                detail::parse_fail(source, line_no, "root " + std::to_string(r) + " out of range");
            }
            out.root = static_cast<Vertex>(r);
        }
        body = detail::trim(body);
        if (body.empty()) continue;

        std::istringstream ls(body);
        long long a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) detail::parse_fail(source, line_no, "expected two integers");
        if (!header) {
            if (a < 0 || a > kMaxOrder) {
                detail::parse_fail(source, line_no, "vertex count " + std::to_string(a) + " outside [0, " +
                                                        std::to_string(kMaxOrder) + "]");
            }
            if (b < 0) detail::parse_fail(source, line_no, "negative edge count");
            header = {static_cast<int>(a), static_cast<int>(b)};
            continue;
        }
        if (static_cast<int>(edges.size()) == header->second) {
            detail::parse_fail(source, line_no, "more edge lines than the declared " + std::to_string(header->second));
        }
        if (a < 0 || a >= header->first || b < 0 || b >= header->first) {
            detail::parse_fail(source, line_no, "endpoint out of range 0.." + std::to_string(header->first - 1));
        }
        if (a == b) detail::parse_fail(source, line_no, "loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!header) detail::parse_fail(source, line_no, "missing \"n m\" header");
    if (static_cast<int>(edges.size()) != header->second) {
        detail::parse_fail(source, line_no,
                           "declared " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    }
    out.graph = Graph::from_edge_list(header->first, edges);
    return out;
}

inline ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    return parse_edge_list(in, path);
}

inline void write_edge_list(std::ostream& out, const Graph& g, std::optional<Vertex> root = std::nullopt) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (root) out << "# root " << *root << '\n';
}

inline std::string to_edge_list_string(const Graph& g, std::optional<Vertex> root = std::nullopt) {
    std::ostringstream os;
    write_edge_list(os, g, root);
    return os.str();
}

inline ParsedGraph parse_edge_list_string(const std::string& text, const std::string& source = "<string>") {
    std::istringstream in(text);
    return parse_edge_list(in, source);
}

}  // namespace rootdom
