#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mstcd/error.hpp"
#include "mstcd/mst.hpp"
#include "oracles.hpp"

using namespace mstcd;

TEST(Mst, UnitSquare) {
    const auto ps = PointSet::from_rows({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const auto tree = minimum_spanning_tree(complete_graph(ps));
    ASSERT_EQ(tree.edges.size(), 3u);
    EXPECT_DOUBLE_EQ(tree.total_weight(), 3.0);
    for (const auto& e : tree.edges) EXPECT_DOUBLE_EQ(e.weight, 1.0);
    // Smallest-index ties: (0,1), (0,2), (1,3).
    EXPECT_EQ(tree.edges[0], (Edge{0, 1, 1.0}));
    EXPECT_EQ(tree.edges[1], (Edge{0, 2, 1.0}));
    EXPECT_EQ(tree.edges[2], (Edge{1, 3, 1.0}));
}

TEST(Mst, CollinearChain) {
    const auto ps = PointSet::from_rows({{0}, {1}, {3}});
    const auto tree = minimum_spanning_tree(complete_graph(ps));
    ASSERT_EQ(tree.edges.size(), 2u);
    EXPECT_EQ(tree.edges[0], (Edge{0, 1, 1.0}));
    EXPECT_EQ(tree.edges[1], (Edge{1, 2, 2.0}));
}

TEST(Mst, RejectsTooFewPoints) {
    EXPECT_THROW(complete_graph(PointSet::from_rows({{1, 2}})), ParameterError);
    EXPECT_THROW(prim_spanning_tree(PointSet::from_rows({{1, 2}})), ParameterError);
}

TEST(Mst, DisconnectedGraphThrows) {
    WeightedGraph g;
    g.node_count = 4;
    g.edges = {{0, 1, 1.0}, {2, 3, 1.0}};
    EXPECT_THROW(minimum_spanning_tree(g), ParameterError);
}

TEST(Mst, EnumerationOracleAndPrimAgreement) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(2, 7);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = size(rng);
        const auto ps = oracle::random_points(rng, n, 3);
        const auto kruskal = minimum_spanning_tree(complete_graph(ps));
        const auto prim = prim_spanning_tree(ps);
        const double expected = oracle::enumerated_mst_weight(n, oracle::distance_matrix(ps));
        ASSERT_EQ(kruskal.edges.size(), n - 1);
        ASSERT_NEAR(kruskal.total_weight(), expected, 1e-9) << "trial " << trial;
        ASSERT_EQ(kruskal.edges, prim.edges) << "trial " << trial;
    }
}

TEST(Mst, PrimMatchesKruskalWithDuplicatePoints) {
    const auto ps = PointSet::from_rows({{0, 0}, {0, 0}, {1, 1}, {1, 1}, {0, 0}, {2, 2}});
    EXPECT_EQ(minimum_spanning_tree(complete_graph(ps)).edges, prim_spanning_tree(ps).edges);
}

TEST(Threshold, IndexRule) {
    EXPECT_EQ(threshold_index(5, 0.5), 2u);
    EXPECT_EQ(threshold_index(4, 0.5), 2u);
    EXPECT_EQ(threshold_index(5, 1.0), 4u);
    EXPECT_EQ(threshold_index(5, 0.0), 0u);
    EXPECT_EQ(threshold_index(10, 0.05), 0u);
    EXPECT_EQ(threshold_index(99, 0.25), 24u);
    EXPECT_THROW(threshold_index(0, 0.5), ParameterError);
    EXPECT_THROW(threshold_index(3, 1.5), ParameterError);
    EXPECT_THROW(threshold_index(3, -0.1), ParameterError);
}

TEST(Threshold, MedianOfFiveEdges) {
    SpanningTree t;
    t.node_count = 6;
    for (double w : {5.0, 1.0, 4.0, 2.0, 3.0}) t.edges.push_back({0, t.edges.size() + 1, w});
    EXPECT_DOUBLE_EQ(compute_threshold(t, 0.5).value, 3.0);
    EXPECT_DOUBLE_EQ(compute_threshold(t, 1.0).value, 5.0);
}

TEST(Threshold, SingleEdge) {
    SpanningTree t{2, {{0, 1, 7.0}}};
    EXPECT_DOUBLE_EQ(compute_threshold(t, 0.0).value, 7.0);
    EXPECT_DOUBLE_EQ(compute_threshold(t, 1.0).value, 7.0);
}

TEST(Threshold, OddMedianAndMonotoneProperty) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> half(0, 20);
    std::uniform_real_distribution<double> w(0.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 * half(rng) + 1;
        SpanningTree t;
        t.node_count = m + 1;
        std::vector<double> weights;
        for (std::size_t i = 0; i < m; ++i) {
            weights.push_back(w(rng));
            t.edges.push_back({0, i + 1, weights.back()});
        }
        std::sort(weights.begin(), weights.end());
        ASSERT_DOUBLE_EQ(compute_threshold(t, 0.5).value, weights[m / 2]);
        double previous = -1.0;
        for (int step = 0; step <= 20; ++step) {
            const double v = compute_threshold(t, step / 20.0).value;
            ASSERT_GE(v, previous);
            previous = v;
        }
    }
}

TEST(TreeDump, RoundTrip) {
    std::mt19937_64 rng(3);
    const auto ps = oracle::random_points(rng, 9, 4);
    const auto tree = minimum_spanning_tree(complete_graph(ps));
    std::stringstream ss;
    write_tree(ss, tree, 0.25);
    double alpha = 0.0;
    const auto back = read_tree(ss, &alpha);
    EXPECT_EQ(alpha, 0.25);
    EXPECT_EQ(back.node_count, tree.node_count);
    EXPECT_EQ(back.edges, tree.edges);
}
