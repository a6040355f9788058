#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mstcd/geometry.hpp"
#include "mstcd/mst.hpp"

namespace mstcd {

enum class DescriptorKind { FullMST, SmallMST, NAry };

// Which tree edges a FullMST query inspects.
enum class ScanMode {
    IncidentEdges,  // edges touching the nearest tree vertex
    AllEdges,       // every tree edge
};

std::string to_string(DescriptorKind kind);
std::string to_string(ScanMode mode);
DescriptorKind descriptor_kind_from_string(const std::string& s);
ScanMode scan_mode_from_string(const std::string& s);

struct NodeDistance {
    std::size_t node = 0;
    double distance = 0.0;
};

struct QueryEvaluation {
    double distance = 0.0;  // distance from the query to the descriptor's shape
    bool accepted = false;
    std::size_t nearest_node = 0;
    // Every descriptor point, ascending by (distance, node).
    std::vector<NodeDistance> per_node_distances;
};

// One-class model: a tree over a point set plus an acceptance threshold.
//
// FullMST descriptors are trained once over a whole class. SmallMST and NAry
// descriptors are built per query over a gamma-sized neighbourhood; for those
// source_indices() maps each local node back to its row in the class set.
class TrainedDescriptor {
public:
    TrainedDescriptor(DescriptorKind kind, PointSet points, SpanningTree tree, Threshold threshold,
                      ScanMode scan, std::size_t gamma, std::vector<std::size_t> source_indices);

    DescriptorKind kind() const noexcept { return kind_; }
    const PointSet& points() const noexcept { return points_; }
    const SpanningTree& tree() const noexcept { return tree_; }
    const Threshold& threshold() const noexcept { return threshold_; }
    ScanMode scan_mode() const noexcept { return scan_; }
    // Effective neighbourhood size (0 for FullMST).
    std::size_t gamma() const noexcept { return gamma_; }
    const std::vector<std::size_t>& source_indices() const noexcept { return source_indices_; }
    // Indices into tree().edges of the edges touching each node.
    const std::vector<std::size_t>& incident_edges(std::size_t node) const { return incident_[node]; }

    bool accepts(double distance) const noexcept { return distance <= threshold_.value; }

private:
    DescriptorKind kind_;
    PointSet points_;
    SpanningTree tree_;
    Threshold threshold_;
    ScanMode scan_;
    std::size_t gamma_;
    std::vector<std::size_t> source_indices_;
    std::vector<std::vector<std::size_t>> incident_;
};

TrainedDescriptor train_full_mst(PointSet points, double alpha, ScanMode scan = ScanMode::IncidentEdges);

QueryEvaluation evaluate_full_mst(const TrainedDescriptor& desc, PointView x);

// gamma larger than the point count is clamped to it; gamma < 2 is rejected.
TrainedDescriptor build_small_mst(const PointSet& points, PointView x, std::size_t gamma, double alpha);
TrainedDescriptor build_nary(const PointSet& points, PointView x, std::size_t gamma, double alpha);

// Same as above with distances from x to every point already computed.
TrainedDescriptor build_small_mst_from_distances(const PointSet& points, std::span<const double> distances_to_x,
                                  std::size_t gamma, double alpha);
TrainedDescriptor build_nary_from_distances(const PointSet& points, std::span<const double> distances_to_x,
                             std::size_t gamma, double alpha);

QueryEvaluation evaluate_local(const TrainedDescriptor& desc, PointView x);

// Generic entry point: dispatches on kind.
QueryEvaluation evaluate(const TrainedDescriptor& desc, PointView x);

// Indices of the `count` smallest distances, ties toward the lower index,
// returned in ascending (distance, index) order.
std::vector<std::size_t> nearest_indices(std::span<const double> distances, std::size_t count);

// Descriptor dump: kind/scan/gamma header followed by the tree dump and the
// descriptor's points, one per line.
void write_descriptor(std::ostream& os, const TrainedDescriptor& desc);
TrainedDescriptor read_descriptor(std::istream& is);

}  // namespace mstcd
