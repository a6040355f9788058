#include <gtest/gtest.h>

#include <random>

#include "mstcd/error.hpp"
#include "mstcd/geometry.hpp"
#include "oracles.hpp"

using namespace mstcd;

namespace {

double dist(const FeatureVector& x, const FeatureVector& a, const FeatureVector& b) {
    return distance_to_edge(x, a, b);
}

}  // namespace

TEST(Geometry, PerpendicularFootInsideSegment) {
    EXPECT_DOUBLE_EQ(dist({0.5, 1}, {0, 0}, {1, 0}), 1.0);
    const auto p = project_onto_edge(FeatureVector{0.5, 1}, FeatureVector{0, 0}, FeatureVector{1, 0});
    EXPECT_TRUE(p.on_segment);
    EXPECT_DOUBLE_EQ(p.t, 0.5);
    EXPECT_DOUBLE_EQ(p.point[0], 0.5);
    EXPECT_DOUBLE_EQ(p.point[1], 0.0);
}

TEST(Geometry, FootOutsideFallsBackToEndpoint) {
    EXPECT_DOUBLE_EQ(dist({2, 0}, {0, 0}, {1, 0}), 1.0);
    EXPECT_DOUBLE_EQ(dist({-3, 4}, {0, 0}, {1, 0}), 5.0);
    const auto p = project_onto_edge(FeatureVector{2, 0}, FeatureVector{0, 0}, FeatureVector{1, 0});
    EXPECT_FALSE(p.on_segment);
    EXPECT_DOUBLE_EQ(p.t, 2.0);
}

TEST(Geometry, SegmentEndpointsAreBoundary) {
    EXPECT_DOUBLE_EQ(dist({0, 1}, {0, 0}, {1, 0}), 1.0);
    EXPECT_DOUBLE_EQ(dist({1, 0}, {0, 0}, {1, 0}), 0.0);
}

TEST(Geometry, DegenerateEdgeUsesVertexDistance) {
    EXPECT_DOUBLE_EQ(dist({3, 4}, {0, 0}, {0, 0}), 5.0);
    EXPECT_THROW(project_onto_edge(FeatureVector{1, 1}, FeatureVector{2, 2}, FeatureVector{2, 2}), DegenerateEdge);
}

TEST(Geometry, DimensionMismatchThrows) {
    EXPECT_THROW(dist({1, 2, 3}, {0, 0}, {1, 0}), DimensionMismatch);
    EXPECT_THROW(euclidean_distance(FeatureVector{1}, FeatureVector{1, 2}), DimensionMismatch);
}

TEST(Geometry, SymmetricInEndpoints) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto ps = oracle::random_points(rng, 3, 5);
        EXPECT_DOUBLE_EQ(distance_to_edge(ps[0], ps[1], ps[2]), distance_to_edge(ps[0], ps[2], ps[1]));
    }
}

TEST(Geometry, NeverExceedsNearestEndpoint) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto ps = oracle::random_points(rng, 3, 4, 3.0);
        const double d = distance_to_edge(ps[0], ps[1], ps[2]);
        EXPECT_LE(d, euclidean_distance(ps[0], ps[1]));
        EXPECT_LE(d, euclidean_distance(ps[0], ps[2]));
        EXPECT_GE(d, 0.0);
    }
}

class DenseSamplingOracle : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DenseSamplingOracle, MatchesSampledMinimum) {
    const std::size_t dim = GetParam();
    std::mt19937_64 rng(1000 + dim);
    for (int i = 0; i < 1000; ++i) {
        const auto ps = oracle::random_points(rng, 3, dim, 2.0);
        const double expected = oracle::sampled_edge_distance(ps[0], ps[1], ps[2]);
        ASSERT_NEAR(distance_to_edge(ps[0], ps[1], ps[2]), expected, 1e-6) << "instance " << i;
    }
}

INSTANTIATE_TEST_SUITE_P(Dims, DenseSamplingOracle, ::testing::Values(2, 10));

TEST(PointSet, RowsAndSubset) {
    auto ps = PointSet::from_rows({{1, 2}, {3, 4}, {5, 6}});
    ASSERT_EQ(ps.size(), 3u);
    ASSERT_EQ(ps.dim(), 2u);
    EXPECT_EQ(ps[1][0], 3.0);
    const std::vector<std::size_t> idx{2, 0};
    const auto sub = ps.subset(idx);
    ASSERT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub[0][1], 6.0);
    EXPECT_EQ(sub[1][0], 1.0);
    EXPECT_THROW(ps.push_back(FeatureVector{1, 2, 3}), DimensionMismatch);
}

TEST(PointSet, EmptyAdoptsDimension) {
    PointSet ps;
    EXPECT_TRUE(ps.empty());
    ps.push_back(FeatureVector{1, 2, 3});
    EXPECT_EQ(ps.dim(), 3u);
    EXPECT_EQ(ps.size(), 1u);
}

TEST(PointSet, DistancesToPoints) {
    auto ps = PointSet::from_rows({{0, 0}, {3, 4}});
    const auto d = distances_to_points(ps, FeatureVector{0, 0});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_DOUBLE_EQ(d[0], 0.0);
    EXPECT_DOUBLE_EQ(d[1], 5.0);
}
