#include "mstcd/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "mstcd/error.hpp"

namespace mstcd {

namespace {

void require_same_dim(PointView a, PointView b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

}  // namespace

double squared_distance(PointView a, PointView b) {
    require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

double euclidean_distance(PointView a, PointView b) {
    return std::sqrt(squared_distance(a, b));
}

EdgeProjection project_onto_edge(PointView x, PointView xi, PointView xj) {
    require_same_dim(x, xi);
    require_same_dim(xi, xj);

    double dot = 0.0;
    double length2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double e = xj[k] - xi[k];
        dot += e * (x[k] - xi[k]);
        length2 += e * e;
    }
    if (length2 == 0.0) throw DegenerateEdge();

    EdgeProjection proj;
    proj.t = dot / length2;
    proj.on_segment = proj.t >= 0.0 && proj.t <= 1.0;
    proj.point.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        proj.point[k] = xi[k] + proj.t * (xj[k] - xi[k]);
    }
    return proj;
}

double distance_to_edge(PointView x, PointView xi, PointView xj) {
    require_same_dim(x, xi);
    require_same_dim(xi, xj);

    double dot = 0.0;
    double length2 = 0.0;
    double to_i2 = 0.0;
    double to_j2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double e = xj[k] - xi[k];
        const double wi = x[k] - xi[k];
        const double wj = x[k] - xj[k];
        dot += e * wi;
        length2 += e * e;
        to_i2 += wi * wi;
        to_j2 += wj * wj;
    }
    const double vertex2 = std::min(to_i2, to_j2);
    if (length2 == 0.0) return std::sqrt(to_i2);

    const double t = dot / length2;
    if (t < 0.0 || t > 1.0) return std::sqrt(vertex2);

    // Second pass instead of |w|^2 - dot^2/|e|^2, which cancels badly near the segment.
    double perp2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = x[k] - xi[k] - t * (xj[k] - xi[k]);
        perp2 += r * r;
    }
    return std::sqrt(std::min(perp2, vertex2));
}

PointSet::PointSet(std::size_t dim, std::vector<double> values) : dim_(dim), values_(std::move(values)) {
    if (dim_ == 0 && !values_.empty()) throw DataError("point set with zero dimension but non-empty storage");
    if (dim_ != 0 && values_.size() % dim_ != 0) {
        throw DataError("point storage of " + std::to_string(values_.size()) +
                        " values is not a multiple of dimension " + std::to_string(dim_));
    }
}

PointSet PointSet::from_rows(const std::vector<FeatureVector>& rows) {
    if (rows.empty()) return PointSet();
    PointSet set(rows.front().size());
    set.reserve(rows.size());
    for (const auto& r : rows) set.push_back(r);
    return set;
}

void PointSet::push_back(PointView p) {
    if (dim_ == 0 && values_.empty()) dim_ = p.size();
    if (p.size() != dim_) throw DimensionMismatch(dim_, p.size());
    values_.insert(values_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
    PointSet out(dim_);
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back((*this)[i]);
    return out;
}

std::vector<double> distances_to_points(const PointSet& points, PointView x) {
    if (!points.empty() && points.dim() != x.size()) throw DimensionMismatch(points.dim(), x.size());
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = euclidean_distance(points[i], x);
    return out;
}

}  // namespace mstcd
