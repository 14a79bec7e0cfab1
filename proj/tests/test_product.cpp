#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rootdom/families.hpp"
#include "rootdom/product.hpp"

using namespace rootdom;

TEST(Product, NumberingConvention) {
    Graph p3 = generate({Family::Path, 3}).graph;
    RootedProduct rp = rooted_product(p3, RootedGraph(p3, 1));
    // Base vertex i keeps id i; copy i's other vertices follow in rank order.
    EXPECT_EQ(rp.base_map, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(rp.copy_map[0], (std::vector<Vertex>{3, 0, 4}));
    EXPECT_EQ(rp.copy_map[2], (std::vector<Vertex>{7, 2, 8}));
    EXPECT_EQ(rp.product.order(), 9);
    EXPECT_EQ(rp.product.size(), 8);
    EXPECT_TRUE(rp.product.adjacent(3, 0));
    EXPECT_TRUE(rp.product.adjacent(1, 2));
}

TEST(Product, P4RootedC3) {
    Graph p4 = generate({Family::Path, 4}).graph;
    Graph c3 = generate({Family::Cycle, 3}).graph;
    RootedProduct rp = rooted_product(p4, RootedGraph(c3, 0));
    EXPECT_EQ(rp.product.order(), 12);
    EXPECT_EQ(rp.product.size(), 15);
}

TEST(Product, Preconditions) {
    Graph k1 = Graph::from_edge_list(1, {});
    Graph k2 = generate({Family::Complete, 2}).graph;
    EXPECT_THROW(rooted_product(k1, RootedGraph(k2, 0)), InputError);
    EXPECT_THROW(rooted_product(k2, RootedGraph(k1, 0)), InputError);
    EXPECT_THROW(RootedGraph(k2, 2), InputError);
    Graph big = generate({Family::Path, 9}).graph;
    EXPECT_THROW(rooted_product(big, RootedGraph(big, 0)), InputError);
}

TEST(Product, DisconnectedFactorGivesDisconnectedProduct) {
    Graph k2 = generate({Family::Complete, 2}).graph;
    Graph e3 = generate({Family::Empty, 3}).graph;
    RootedProduct rp = rooted_product(k2, RootedGraph(e3, 0));
    EXPECT_EQ(rp.product.order(), 6);
    EXPECT_EQ(rp.product.size(), 1);
    EXPECT_FALSE(is_connected(rp.product));
}

TEST(ProductProperty, OrderSizeAndCopies) {
    for (int k = 0; k < 100; ++k) {
        Rng rng(split_seed(21, k));
        Graph g = generate({Family::RandomConnected, rng.uniform(2, 6), 0.5, split_seed(22, k)}).graph;
        Graph h = generate({Family::RandomConnected, rng.uniform(2, 6), 0.5, split_seed(23, k)}).graph;
        const Vertex root = rng.uniform(0, h.order() - 1);
        RootedProduct rp = rooted_product(g, RootedGraph(h, root));
        EXPECT_EQ(rp.product.order(), g.order() * h.order());
        EXPECT_EQ(rp.product.size(), g.size() + g.order() * h.size());
        for (int i = 0; i < g.order(); ++i) {
            EXPECT_EQ(rp.copy(i, root), rp.base(i));
            // Each copy induces an isomorphic image of H under copy_map.
            for (auto [a, b] : h.edges()) EXPECT_TRUE(rp.product.adjacent(rp.copy(i, a), rp.copy(i, b)));
        }
        const auto copies = copy_vertex_sets(rp);
        VertexSet all;
        for (VertexSet c : copies) {
            EXPECT_FALSE(all.intersects(c));
            all |= c;
        }
        EXPECT_EQ(all, rp.product.vertices());
        // Base vertices are cut vertices when H is connected.
        EXPECT_TRUE(base_vertex_set(rp).is_subset_of(cut_vertices(rp.product)));
    }
}

TEST(ProductProperty, TreeProductIsTreeWithExpectedLeafCount) {
    for (int k = 0; k < 100; ++k) {
        Rng rng(split_seed(31, k));
        Graph t1 = random_tree(rng.uniform(2, 7), split_seed(32, k));
        Graph t2 = random_tree(rng.uniform(2, 7), split_seed(33, k));
        const Vertex root = rng.uniform(0, t2.order() - 1);
        RootedProduct rp = rooted_product(t1, RootedGraph(t2, root));
        ASSERT_TRUE(is_tree(rp.product));
        // Independent count: degree-one vertices in the product, from the naive matrix.
        oracle::Naive naive(rp.product);
        int n1 = 0;
        for (int v = 0; v < naive.n; ++v) n1 += std::count(naive.adj[v].begin(), naive.adj[v].end(), true) == 1;
        const int leaves_h = leaves(t2).size();
        const bool root_is_leaf = t2.degree(root) == 1;
        EXPECT_EQ(n1, t1.order() * (root_is_leaf ? leaves_h - 1 : leaves_h));
    }
}
