#pragma once

#include <string>
#include <vector>

#include "rootdom/graph.hpp"

namespace rootdom {

/// A graph H with a designated root vertex.
struct RootedGraph {
    Graph graph;
    Vertex root = 0;

    RootedGraph() = default;
    RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r) {
        if (!graph.contains(root)) {
            throw InputError("root " + std::to_string(root) + " is not a vertex of a graph of order " +
                             std::to_string(graph.order()));
        }
    }
};

/// G∘H with provenance.
///
/// Numbering: vertex i of G keeps id i (it is the root of copy i); the
/// remaining vertices of copy i follow in H order, skipping the root:
/// id = n(G) + i*(n(H)-1) + rank of the H-vertex among non-root vertices.
struct RootedProduct {
    Graph product;
    std::vector<Vertex> base_map;               // G-vertex -> product id
    std::vector<std::vector<Vertex>> copy_map;  // [copy i][H-vertex] -> product id
    int base_order = 0;

    Vertex base(Vertex g_vertex) const { return base_map[g_vertex]; }
    Vertex copy(int i, Vertex h_vertex) const { return copy_map[i][h_vertex]; }
};

inline RootedProduct rooted_product(const Graph& g, const RootedGraph& h) {
    const int n = g.order();
    const int nh = h.graph.order();
    if (n < 2 || nh < 2) {
        throw InputError("rooted product needs both factors of order >= 2 (got n(G)=" + std::to_string(n) +
                         ", n(H)=" + std::to_string(nh) + ")");
    }
    if (n * nh > kMaxOrder) {
        throw InputError("rooted product of order " + std::to_string(n * nh) + " exceeds the supported maximum " +
                         std::to_string(kMaxOrder));
    }
    RootedProduct rp;
    rp.base_order = n;
    rp.base_map.resize(n);
    rp.copy_map.assign(n, std::vector<Vertex>(nh, -1));
    Vertex next = n;
    for (int i = 0; i < n; ++i) {
        rp.base_map[i] = i;
        for (Vertex x = 0; x < nh; ++x) rp.copy_map[i][x] = x == h.root ? i : next++;
    }
    std::vector<Edge> edges(g.edges());
    for (int i = 0; i < n; ++i) {
        for (auto [a, b] : h.graph.edges()) edges.emplace_back(rp.copy_map[i][a], rp.copy_map[i][b]);
    }
    rp.product = Graph::from_edge_list(n * nh, edges);
    return rp;
}

/// V_1..V_n as product-id sets; V_i contains the root identified with base vertex i.
inline std::vector<VertexSet> copy_vertex_sets(const RootedProduct& rp) {
    std::vector<VertexSet> out;
    out.reserve(rp.copy_map.size());
    for (const auto& row : rp.copy_map) out.push_back(VertexSet::from_vector(row));
    return out;
}

inline VertexSet base_vertex_set(const RootedProduct& rp) { return VertexSet::from_vector(rp.base_map); }

}  // namespace rootdom
