#include <gtest/gtest.h>

#include <vector>

#include "oracle.hpp"
#include "rootdom/families.hpp"
#include "rootdom/graph.hpp"

using namespace rootdom;

namespace {

Graph path(int n) { return generate({Family::Path, n}).graph; }
Graph cycle(int n) { return generate({Family::Cycle, n}).graph; }

// A spread of small graphs, connected and not, for property checks.
std::vector<Graph> sample_graphs(int count, int max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    for (int k = 0; k < count; ++k) {
        Rng rng(split_seed(seed, k));
        const int n = rng.uniform(1, max_n);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.coin(0.35)) edges.emplace_back(u, v);
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s{0, 2, 5};
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.to_string(), "{0,2,5}");
    EXPECT_EQ(s.complement(6), (VertexSet{1, 3, 4}));
    EXPECT_EQ((s - VertexSet{2}).to_vector(), (std::vector<Vertex>{0, 5}));
    EXPECT_TRUE(VertexSet::lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
    EXPECT_FALSE(VertexSet::lex_less(VertexSet{1, 2}, VertexSet{0, 3}));
    EXPECT_EQ(VertexSet::full(64).size(), 64);
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), InputError);
    EXPECT_THROW(Graph::from_edge_list(3, {{-1, 0}}), InputError);
    EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), InputError);
    EXPECT_THROW(Graph::from_edge_list(65, {}), InputError);
}

TEST(Graph, MergesDuplicateEdges) {
    Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.size(), 2);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, PathBasics) {
    Graph p4 = path(4);
    EXPECT_EQ(p4.order(), 4);
    EXPECT_EQ(p4.size(), 3);
    EXPECT_EQ(p4.degree(0), 1);
    EXPECT_EQ(p4.degree(1), 2);
    EXPECT_EQ(p4.min_degree(), 1);
    EXPECT_EQ(p4.max_degree(), 2);
    EXPECT_EQ(p4.closed_neighbors(1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(p4.distances().at(0, 3), 3);
    EXPECT_TRUE(is_tree(p4));
    EXPECT_EQ(leaves(p4), (VertexSet{0, 3}));
    EXPECT_EQ(support_vertices(p4), (VertexSet{1, 2}));
    EXPECT_EQ(cut_vertices(p4), (VertexSet{1, 2}));
}

TEST(Graph, DisconnectedDistances) {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(is_connected(g));
    EXPECT_FALSE(g.distances().reachable(0, 2));
    EXPECT_EQ(g.distances().at(0, 2), kInfinity);
}

TEST(Graph, DeleteVertexOfP4) {
    DerivedGraph d = delete_vertex(path(4), 1);
    EXPECT_EQ(d.graph.order(), 3);
    EXPECT_EQ(d.graph.size(), 1);
    EXPECT_EQ(d.new_to_old, (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(d.old_to_new[1], -1);
    EXPECT_EQ(d.to_host(VertexSet{1, 2}), (VertexSet{2, 3}));
}

TEST(Graph, DeletingEverythingIsAnError) {
    EXPECT_THROW(delete_vertices(path(3), VertexSet{0, 1, 2}), InputError);
}

TEST(Graph, ConnectedSubsetRejectsEmpty) {
    EXPECT_THROW(is_connected_subset(path(3), VertexSet{}), InputError);
    EXPECT_TRUE(is_connected_subset(path(4), VertexSet{1, 2}));
    EXPECT_FALSE(is_connected_subset(path(4), VertexSet{0, 2}));
}

TEST(Graph, GeodesicIntervalAndConvexity) {
    Graph c4 = cycle(4);
    EXPECT_EQ(geodesic_interval(c4, 0, 2), (VertexSet{0, 1, 2, 3}));
    EXPECT_FALSE(is_convex_set(c4, VertexSet{0, 2}));
    EXPECT_TRUE(is_convex_set(c4, VertexSet{0, 1}));
    EXPECT_FALSE(is_convex_set(c4, VertexSet{0, 1, 2}));
    EXPECT_TRUE(is_convex_set(path(4), VertexSet{1, 2}));
    EXPECT_THROW(is_convex_set(Graph::from_edge_list(2, {}), VertexSet{0}), InputError);
}

TEST(Graph, WeaklyInducedSubgraph) {
    // On P5, D = {1, 3}: N[D] is everything, edges are all four.
    Graph p5 = path(5);
    DerivedGraph w = weakly_induced_subgraph(p5, VertexSet{1, 3});
    EXPECT_EQ(w.graph.order(), 5);
    EXPECT_EQ(w.graph.size(), 4);
    EXPECT_TRUE(is_weakly_connected(p5, VertexSet{1, 3}));
    EXPECT_FALSE(is_weakly_connected(path(6), VertexSet{0, 4}));
    EXPECT_THROW(weakly_induced_subgraph(p5, VertexSet{}), InputError);
}

TEST(Graph, PrivateNeighborSet) {
    // Star center 0 with leaves 1..3, D = {0, 1}.
    Graph s = generate({Family::Star, 3}).graph;
    EXPECT_EQ(private_neighbor_set(s, VertexSet{0, 1}, 0), (VertexSet{1, 2, 3}));
    // The displayed formula subtracts open neighborhoods only, so v's own
    // neighbor in D survives; the prose reading drops it.
    EXPECT_EQ(private_neighbor_set(s, VertexSet{0, 1}, 1), VertexSet{0});
    EXPECT_EQ(private_neighbor_set(s, VertexSet{0, 1}, 1, PrivateNeighborRule::Prose), VertexSet{});
    EXPECT_EQ(private_neighbor_set(s, VertexSet{0}, 0), (VertexSet{0, 1, 2, 3}));
    EXPECT_THROW(private_neighbor_set(s, VertexSet{0}, 1), InputError);
    EXPECT_EQ(private_neighbor_set(path(4), VertexSet{1, 2}, 1), (VertexSet{0, 2}));
    Graph k3 = generate({Family::Complete, 3}).graph;
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(private_neighbor_set(k3, k3.vertices(), v), VertexSet{});
}

TEST(GraphProperty, BfsDistancesMatchMatrixSquaring) {
    for (const Graph& g : sample_graphs(60, 12, 101)) {
        const int n = g.order();
        // reach[k] = pairs within distance 2^k, via boolean matrix squaring; then
        // recover exact distances by counting how many walk lengths are needed.
        std::vector<std::vector<bool>> within(n, std::vector<bool>(n, false));
        for (Vertex v = 0; v < n; ++v) within[v][v] = true;
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
        for (Vertex v = 0; v < n; ++v) dist[v][v] = 0;
        for (int len = 1; len < n; ++len) {
            auto next = within;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex w = 0; w < n; ++w)
                    if (within[u][w])
                        for (Vertex x : g.neighbors(w)) next[u][x] = true;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex w = 0; w < n; ++w)
                    if (next[u][w] && dist[u][w] < 0) dist[u][w] = len;
            within = next;
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = 0; w < n; ++w) {
                const int expected = dist[u][w] < 0 ? kInfinity : dist[u][w];
                ASSERT_EQ(g.distances().at(u, w), expected);
            }
    }
}

TEST(GraphProperty, DeletionOrderAndSize) {
    int k = 0;
    for (const Graph& g : sample_graphs(60, 10, 202)) {
        Rng rng(split_seed(7, k++));
        VertexSet a;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng.coin(0.4)) a.insert(v);
        if (a == g.vertices()) continue;
        DerivedGraph d = delete_vertices(g, a);
        int kept_edges = 0;
        for (auto [u, v] : g.edges()) kept_edges += !a.contains(u) && !a.contains(v);
        EXPECT_EQ(d.graph.order(), g.order() - a.size());
        EXPECT_EQ(d.graph.size(), kept_edges);
    }
}

TEST(GraphProperty, ConvexImpliesConnected) {
    for (const Graph& g : sample_graphs(40, 8, 303)) {
        if (!is_connected(g)) continue;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
            VertexSet s(bits);
            if (is_convex_set(g, s)) {
                ASSERT_TRUE(is_connected_subset(g, s)) << s.to_string();
            }
        }
    }
}

TEST(GraphProperty, WeaklyInducedEdgeCount) {
    int k = 0;
    for (const Graph& g : sample_graphs(40, 9, 404)) {
        oracle::Naive naive(g);
        Rng rng(split_seed(9, k++));
        VertexSet d;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng.coin(0.3)) d.insert(v);
        if (d.empty()) d.insert(0);
        int expected_edges = 0;
        for (auto [u, v] : g.edges()) expected_edges += d.contains(u) || d.contains(v);
        DerivedGraph w = weakly_induced_subgraph(g, d);
        EXPECT_EQ(w.graph.order(), g.closed_neighbors(d).size());
        EXPECT_EQ(w.graph.size(), expected_edges);
        EXPECT_EQ(is_weakly_connected(g, d), naive.weakly_connected(d.bits()));
        EXPECT_EQ(is_weakly_connected(g, d), is_connected(w.graph));
    }
}

TEST(GraphProperty, TreeLeafCountFromDegrees) {
    for (int k = 0; k < 50; ++k) {
        const int n = 2 + k % 12;
        Graph t = random_tree(n, split_seed(505, k));
        ASSERT_TRUE(is_tree(t));
        int degree_one = 0;
        for (Vertex v = 0; v < n; ++v) degree_one += t.degree(v) == 1;
        EXPECT_EQ(leaves(t).size(), degree_one);
        // Sum of degrees is 2(n-1), so n1 = 2 + sum over degree >= 3 of (deg - 2).
        int excess = 0;
        for (Vertex v = 0; v < n; ++v) excess += std::max(0, t.degree(v) - 2);
        EXPECT_EQ(leaves(t).size(), 2 + excess);
    }
}
