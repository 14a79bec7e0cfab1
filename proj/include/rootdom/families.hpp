#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rootdom/graph.hpp"
#include "rootdom/product.hpp"

namespace rootdom {

enum class Family { Path, Cycle, Star, SubdividedStar, Complete, Empty, RandomTree, RandomConnected };

inline constexpr std::string_view family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::SubdividedStar: return "subdivided_star";
        case Family::Complete: return "complete";
        case Family::Empty: return "empty";
        case Family::RandomTree: return "random_tree";
        case Family::RandomConnected: return "random_connected";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::SubdividedStar, Family::Complete,
                     Family::Empty, Family::RandomTree, Family::RandomConnected}) {
        if (family_name(f) == name) return f;
    }
    throw InputError("unknown family \"" + std::string(name) + "\"");
}

/// `size` is the order n for every family except the stars, where it is the
/// number of star leaves m (S_{1,m} has m+1 vertices, the subdivided star m+2).
struct FamilySpec {
    Family family = Family::Path;
    int size = 2;
    double edge_probability = 0.5;  // RandomConnected only
    std::uint64_t seed = 0;         // random families only
};

struct FamilyGraph {
    Graph graph;
    std::optional<Vertex> root;  // canonical root, when the family has one

    RootedGraph rooted() const {
        if (!root) throw InputError("family has no canonical root");
        return RootedGraph(graph, *root);
    }
};

// splitmix64 finaliser; child seeds are split_seed(parent, job index).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index) { return mix64(mix64(parent) ^ index); }

/// mt19937_64 with portable (library-independent) integer and coin draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    int uniform(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % range);
    }

    /// True with probability p (53-bit resolution).
    bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

/// Labeled tree from a Prüfer sequence over 0..n-1 (length n-2).
inline Graph tree_from_pruefer(int n, const std::vector<Vertex>& code) {
    if (n < 2 || static_cast<int>(code.size()) != n - 2) throw InputError("Prüfer code must have length n-2");
    std::vector<int> degree(n, 1);
    for (Vertex v : code) {
        if (v < 0 || v >= n) throw InputError("Prüfer code entry out of range");
        ++degree[v];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (Vertex v : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.push(v);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph::from_edge_list(n, edges);
}

inline Graph random_tree(int n, std::uint64_t seed) {
    if (n == 1) return Graph::from_edge_list(1, {});
    Rng rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = rng.uniform(0, n - 1);
    return tree_from_pruefer(n, code);
}

inline constexpr int kConnectedSampleAttempts = 1000;

inline Graph random_connected(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kConnectedSampleAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.coin(p)) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    throw InputError("no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample in " +
                     std::to_string(kConnectedSampleAttempts) + " attempts");
}

inline FamilyGraph generate(const FamilySpec& spec) {
    const int s = spec.size;
    auto need = [&](int minimum, const char* what) {
        if (s < minimum || s > kMaxOrder) {
            throw InputError(std::string(family_name(spec.family)) + " needs " + what + " in [" +
                             std::to_string(minimum) + ", " + std::to_string(kMaxOrder) + "], got " +
                             std::to_string(s));
        }
    };
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::Path:
            need(2, "n");
            for (Vertex v = 0; v + 1 < s; ++v) edges.emplace_back(v, v + 1);
            return {Graph::from_edge_list(s, edges), std::nullopt};
        case Family::Cycle:
            need(3, "n");
            for (Vertex v = 0; v < s; ++v) edges.emplace_back(v, (v + 1) % s);
            return {Graph::from_edge_list(s, edges), std::nullopt};
        case Family::Star:
            // center 0, leaves 1..m
            need(2, "m");
            if (s + 1 > kMaxOrder) throw InputError("star too large");
            for (Vertex v = 1; v <= s; ++v) edges.emplace_back(0, v);
            return {Graph::from_edge_list(s + 1, edges), Vertex{0}};
        case Family::SubdividedStar:
            // center 0, leaves 1..m-1, subdivision vertex m, root m+1 at distance two
            need(2, "m");
            if (s + 2 > kMaxOrder) throw InputError("subdivided star too large");
            for (Vertex v = 1; v < s; ++v) edges.emplace_back(0, v);
            edges.emplace_back(0, s);
            edges.emplace_back(s, s + 1);
            return {Graph::from_edge_list(s + 2, edges), Vertex{s + 1}};
        case Family::Complete:
            need(1, "n");
            for (Vertex u = 0; u < s; ++u)
                for (Vertex v = u + 1; v < s; ++v) edges.emplace_back(u, v);
            return {Graph::from_edge_list(s, edges), std::nullopt};
        case Family::Empty:
            need(1, "n");
            return {Graph::from_edge_list(s, edges), std::nullopt};
        case Family::RandomTree:
            need(1, "n");
            return {random_tree(s, spec.seed), std::nullopt};
        case Family::RandomConnected:
            need(1, "n");
            if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
                throw InputError("edge probability must lie in [0, 1]");
            }
            return {random_connected(s, spec.edge_probability, spec.seed), std::nullopt};
    }
    throw InputError("unhandled family");
}

inline std::vector<RootedGraph> all_roots(const Graph& h) {
    std::vector<RootedGraph> out;
    for (Vertex v = 0; v < h.order(); ++v) out.emplace_back(h, v);
    return out;
}

}  // namespace rootdom
