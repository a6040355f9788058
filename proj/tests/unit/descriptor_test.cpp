#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mstcd/descriptor.hpp"
#include "mstcd/error.hpp"
#include "oracles.hpp"

using namespace mstcd;

TEST(FullMst, TwoPoints) {
    const auto d = train_full_mst(PointSet::from_rows({{0, 0}, {4, 0}}), 0.5);
    EXPECT_EQ(d.kind(), DescriptorKind::FullMST);
    ASSERT_EQ(d.tree().edges.size(), 1u);
    EXPECT_DOUBLE_EQ(d.threshold().value, 4.0);
}

TEST(FullMst, CollinearThreshold) {
    const auto d = train_full_mst(PointSet::from_rows({{0}, {1}, {3}}), 0.5);
    EXPECT_DOUBLE_EQ(d.threshold().value, 2.0);
}

TEST(FullMst, RejectsSinglePoint) {
    EXPECT_THROW(train_full_mst(PointSet::from_rows({{1, 1}}), 0.5), ParameterError);
}

TEST(FullMst, SingleEdgeQuery) {
    for (double alpha : {0.0, 1.0}) {
        const auto d = train_full_mst(PointSet::from_rows({{0, 0}, {2, 0}}), alpha);
        const auto q = evaluate_full_mst(d, FeatureVector{1, 1});
        EXPECT_DOUBLE_EQ(q.distance, 1.0);
        EXPECT_EQ(q.accepted, d.threshold().value >= 1.0);
    }
}

TEST(FullMst, PerNodeDistancesSorted) {
    const auto d = train_full_mst(PointSet::from_rows({{0, 0}, {5, 0}, {1, 0}, {3, 0}}), 0.5);
    const auto q = evaluate_full_mst(d, FeatureVector{2.9, 0});
    ASSERT_EQ(q.per_node_distances.size(), 4u);
    EXPECT_EQ(q.nearest_node, 3u);
    for (std::size_t i = 1; i < q.per_node_distances.size(); ++i) {
        EXPECT_LE(q.per_node_distances[i - 1].distance, q.per_node_distances[i].distance);
    }
}

TEST(FullMst, DimensionMismatch) {
    const auto d = train_full_mst(PointSet::from_rows({{0, 0}, {2, 0}}), 0.5);
    EXPECT_THROW(evaluate_full_mst(d, FeatureVector{1, 1, 1}), DimensionMismatch);
}

TEST(FullMst, IncidentScanIgnoresFarEdges) {
    // Nearest vertex is (0,3); its only edge runs up, while (1,0)-(3,0) passes just under x.
    const auto pts = PointSet::from_rows({{0, 3}, {0, 6}, {1, 0}, {3, 0}, {0, 9}});
    const auto inc = train_full_mst(pts, 0.5, ScanMode::IncidentEdges);
    const auto all = train_full_mst(pts, 0.5, ScanMode::AllEdges);
    const FeatureVector x{2, 1.6};
    const double di = evaluate_full_mst(inc, x).distance;
    const double da = evaluate_full_mst(all, x).distance;
    EXPECT_LE(da, di);
}

TEST(FullMst, AllEdgesLowerBoundsIncidentProperty) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = oracle::random_points(rng, 12, 2);
        const auto inc = train_full_mst(pts, 0.5, ScanMode::IncidentEdges);
        const auto all = train_full_mst(pts, 0.5, ScanMode::AllEdges);
        const auto xs = oracle::random_points(rng, 5, 2, 1.5);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double da = evaluate_full_mst(all, xs[i]).distance;
            ASSERT_LE(da, evaluate_full_mst(inc, xs[i]).distance);
            double brute = std::numeric_limits<double>::infinity();
            for (const auto& e : all.tree().edges) {
                brute = std::min(brute, distance_to_edge(xs[i], pts[e.u], pts[e.v]));
            }
            ASSERT_NEAR(da, brute, 1e-12);
        }
    }
}

TEST(FullMst, TrainingPointsAcceptedProperty) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = oracle::random_points(rng, 15, 3);
        for (auto scan : {ScanMode::IncidentEdges, ScanMode::AllEdges}) {
            const auto d = train_full_mst(pts, 0.0, scan);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto q = evaluate_full_mst(d, pts[i]);
                ASSERT_EQ(q.distance, 0.0);
                ASSERT_TRUE(q.accepted);
            }
        }
    }
}

TEST(SmallMst, NearestTwo) {
    const auto pts = PointSet::from_rows({{0, 0}, {1, 0}, {10, 0}});
    const auto d = build_small_mst(pts, FeatureVector{0.4, 0}, 2, 0.5);
    EXPECT_EQ(d.kind(), DescriptorKind::SmallMST);
    EXPECT_EQ(d.source_indices(), (std::vector<std::size_t>{0, 1}));
    ASSERT_EQ(d.tree().edges.size(), 1u);
    EXPECT_DOUBLE_EQ(d.tree().edges[0].weight, 1.0);
    EXPECT_DOUBLE_EQ(d.threshold().value, 1.0);
}

TEST(SmallMst, FullGammaEqualsFullTree) {
    std::mt19937_64 rng(4);
    const auto pts = oracle::random_points(rng, 10, 3);
    const auto full = train_full_mst(pts, 0.3);
    const auto small = build_small_mst(pts, FeatureVector{0.1, 0.2, 0.3}, 10, 0.3);
    EXPECT_EQ(small.tree().edges, full.tree().edges);
    EXPECT_DOUBLE_EQ(small.threshold().value, full.threshold().value);
}

TEST(SmallMst, DuplicatePointsZeroThreshold) {
    const auto pts = PointSet::from_rows({{1, 1}, {1, 1}, {5, 5}});
    const auto d = build_small_mst(pts, FeatureVector{1, 1}, 2, 0.5);
    EXPECT_DOUBLE_EQ(d.threshold().value, 0.0);
    EXPECT_TRUE(evaluate_local(d, FeatureVector{1, 1}).accepted);
    EXPECT_FALSE(evaluate_local(d, FeatureVector{1, 1.001}).accepted);
}

TEST(SmallMst, GammaClampedAndValidated) {
    const auto pts = PointSet::from_rows({{0, 0}, {1, 0}, {3, 0}});
    EXPECT_EQ(build_small_mst(pts, FeatureVector{0, 0}, 50, 0.5).gamma(), 3u);
    EXPECT_THROW(build_small_mst(pts, FeatureVector{0, 0}, 1, 0.5), ParameterError);
    EXPECT_THROW(build_nary(pts, FeatureVector{0, 0}, 0, 0.5), ParameterError);
}

TEST(Nary, StarExample) {
    const auto pts = PointSet::from_rows({{0, 0}, {1, 0}, {5, 0}, {1.1, 0}});
    const auto d = build_nary(pts, FeatureVector{0.9, 0}, 3, 0.5);
    EXPECT_EQ(d.kind(), DescriptorKind::NAry);
    EXPECT_EQ(d.source_indices(), (std::vector<std::size_t>{1, 3, 0}));
    ASSERT_EQ(d.tree().edges.size(), 2u);
    EXPECT_NEAR(d.tree().edges[0].weight, 0.1, 1e-12);
    EXPECT_DOUBLE_EQ(d.tree().edges[1].weight, 1.0);
    for (const auto& e : d.tree().edges) EXPECT_EQ(e.u, 0u);
    EXPECT_DOUBLE_EQ(d.threshold().value, 1.0);
}

TEST(Nary, GammaTwoSingleEdge) {
    const auto pts = PointSet::from_rows({{0, 0}, {2, 0}, {7, 0}});
    const auto d = build_nary(pts, FeatureVector{6, 0}, 2, 0.5);
    ASSERT_EQ(d.tree().edges.size(), 1u);
    EXPECT_EQ(d.source_indices(), (std::vector<std::size_t>{2, 1}));
    EXPECT_DOUBLE_EQ(d.tree().edges[0].weight, 5.0);
}

TEST(Nary, EquidistantTieUsesLowestIndex) {
    const auto pts = PointSet::from_rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    const auto d = build_nary(pts, FeatureVector{0, 0}, 3, 0.5);
    EXPECT_EQ(d.source_indices().front(), 0u);
    EXPECT_EQ(d.source_indices(), (std::vector<std::size_t>{0, 1, 3}));
}

TEST(Nary, RootExcludedEvenWithDuplicates) {
    const auto pts = PointSet::from_rows({{0, 0}, {0, 0}, {3, 0}});
    const auto d = build_nary(pts, FeatureVector{0, 0}, 2, 0.5);
    EXPECT_EQ(d.source_indices(), (std::vector<std::size_t>{0, 1}));
    EXPECT_DOUBLE_EQ(d.tree().edges[0].weight, 0.0);
}

TEST(Local, QueryThatBuiltTheStructure) {
    const auto pts = PointSet::from_rows({{0, 0}, {1, 0}, {5, 1}, {1.1, 0.3}});
    const FeatureVector x{1, 0};
    const auto d = build_nary(pts, x, 3, 0.0);
    const auto q = evaluate_local(d, x);
    EXPECT_EQ(q.distance, 0.0);
    EXPECT_TRUE(q.accepted);
}

TEST(Local, PerpendicularRejection) {
    const auto pts = PointSet::from_rows({{0, 0}, {1, 0}});
    const auto d = build_nary(pts, FeatureVector{0.5, 2}, 2, 0.5);
    ASSERT_DOUBLE_EQ(d.threshold().value, 1.0);
    const auto q = evaluate_local(d, FeatureVector{0.5, 2});
    EXPECT_DOUBLE_EQ(q.distance, 2.0);
    EXPECT_FALSE(q.accepted);
}

TEST(Local, BruteForceEdgeLoop) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = oracle::random_points(rng, 20, 4);
        const auto x = oracle::random_points(rng, 1, 4);
        for (bool nary : {false, true}) {
            const auto d = nary ? build_nary(pts, x[0], 6, 0.5) : build_small_mst(pts, x[0], 6, 0.5);
            double brute = std::numeric_limits<double>::infinity();
            for (const auto& e : d.tree().edges) {
                brute = std::min(brute, distance_to_edge(x[0], d.points()[e.u], d.points()[e.v]));
            }
            ASSERT_NEAR(evaluate_local(d, x[0]).distance, brute, 1e-9);
        }
    }
}

TEST(Local, DeterministicBuild) {
    std::mt19937_64 rng(12);
    const auto pts = oracle::random_points(rng, 30, 3);
    const FeatureVector x{0.1, -0.2, 0.3};
    for (bool nary : {false, true}) {
        const auto a = nary ? build_nary(pts, x, 7, 0.4) : build_small_mst(pts, x, 7, 0.4);
        const auto b = nary ? build_nary(pts, x, 7, 0.4) : build_small_mst(pts, x, 7, 0.4);
        EXPECT_EQ(a.tree().edges, b.tree().edges);
        EXPECT_EQ(a.source_indices(), b.source_indices());
    }
}

TEST(Local, AlphaMonotoneAcceptance) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = oracle::random_points(rng, 15, 2);
        const auto x = oracle::random_points(rng, 1, 2);
        bool was_accepted = false;
        for (int s = 0; s <= 10; ++s) {
            const auto d = build_small_mst(pts, x[0], 8, s / 10.0);
            const bool acc = evaluate_local(d, x[0]).accepted;
            ASSERT_TRUE(acc || !was_accepted);
            was_accepted = acc;
        }
    }
}

TEST(Local, RejectsFullDescriptor) {
    const auto d = train_full_mst(PointSet::from_rows({{0, 0}, {1, 0}}), 0.5);
    EXPECT_THROW(evaluate_local(d, FeatureVector{0, 0}), ParameterError);
}

TEST(Descriptor, KindStrings) {
    EXPECT_EQ(descriptor_kind_from_string(to_string(DescriptorKind::NAry)), DescriptorKind::NAry);
    EXPECT_EQ(scan_mode_from_string("all"), ScanMode::AllEdges);
    EXPECT_THROW(scan_mode_from_string("some"), ParameterError);
}

TEST(Descriptor, DumpRoundTrip) {
    std::mt19937_64 rng(30);
    const auto pts = oracle::random_points(rng, 12, 3);
    const std::vector<TrainedDescriptor> ds{
        train_full_mst(pts, 0.25, ScanMode::AllEdges),
        build_small_mst(pts, FeatureVector{0, 0, 0}, 5, 0.5),
        build_nary(pts, FeatureVector{0, 0, 0}, 4, 1.0),
    };
    for (const auto& d : ds) {
        std::stringstream ss;
        write_descriptor(ss, d);
        const auto back = read_descriptor(ss);
        EXPECT_EQ(back.kind(), d.kind());
        EXPECT_EQ(back.scan_mode(), d.scan_mode());
        EXPECT_EQ(back.gamma(), d.gamma());
        EXPECT_EQ(back.threshold().value, d.threshold().value);
        EXPECT_EQ(back.points().values(), d.points().values());
        EXPECT_EQ(back.tree().edges, d.tree().edges);
        EXPECT_EQ(back.source_indices(), d.source_indices());
    }
}

TEST(Descriptor, CorruptDumpRejected) {
    std::stringstream ss("# descriptor wobbly\n");
    EXPECT_ANY_THROW(read_descriptor(ss));
}
