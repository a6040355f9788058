#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mstcd {

using FeatureVector = std::vector<double>;
using PointView = std::span<const double>;

// Orthogonal projection of a point onto the line through an edge.
struct EdgeProjection {
    double t = 0.0;         // barycentric parameter along xi -> xj
    FeatureVector point;    // xi + t * (xj - xi)
    bool on_segment = false;
};

double squared_distance(PointView a, PointView b);
double euclidean_distance(PointView a, PointView b);

// Throws DegenerateEdge when xi == xj.
EdgeProjection project_onto_edge(PointView x, PointView xi, PointView xj);

// Distance from x to the segment [xi, xj]: perpendicular distance when the
// projection falls on the segment, nearest endpoint otherwise. A zero-length
// edge reduces to the vertex distance.
double distance_to_edge(PointView x, PointView xi, PointView xj);

// Dense row-major point store. All rows share one dimension.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<double> values);

    static PointSet from_rows(const std::vector<FeatureVector>& rows);

    void push_back(PointView p);
    void reserve(std::size_t rows) { values_.reserve(rows * dim_); }

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : values_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return size() == 0; }

    PointView operator[](std::size_t i) const {
        return PointView(values_.data() + i * dim_, dim_);
    }
    std::span<double> row(std::size_t i) { return std::span<double>(values_.data() + i * dim_, dim_); }

    PointSet subset(std::span<const std::size_t> indices) const;

    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> values_;
};

// Euclidean distance from x to every point of the set, in set order.
std::vector<double> distances_to_points(const PointSet& points, PointView x);

}  // namespace mstcd
