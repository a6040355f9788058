#include "mstcd/descriptor.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mstcd/error.hpp"

namespace mstcd {

std::string to_string(DescriptorKind kind) {
    switch (kind) {
        case DescriptorKind::FullMST: return "full-mst";
        case DescriptorKind::SmallMST: return "small-mst";
        case DescriptorKind::NAry: return "n-ary";
    }
    return "unknown";
}

std::string to_string(ScanMode mode) {
    return mode == ScanMode::AllEdges ? "all" : "incident";
}

DescriptorKind descriptor_kind_from_string(const std::string& s) {
    if (s == "full-mst") return DescriptorKind::FullMST;
    if (s == "small-mst") return DescriptorKind::SmallMST;
    if (s == "n-ary") return DescriptorKind::NAry;
    throw ParameterError("unknown descriptor kind '" + s + "'");
}

ScanMode scan_mode_from_string(const std::string& s) {
    if (s == "incident") return ScanMode::IncidentEdges;
    if (s == "all") return ScanMode::AllEdges;
    throw ParameterError("unknown scan mode '" + s + "' (expected incident or all)");
}

TrainedDescriptor::TrainedDescriptor(DescriptorKind kind, PointSet points, SpanningTree tree, Threshold threshold,
                                     ScanMode scan, std::size_t gamma, std::vector<std::size_t> source_indices)
    : kind_(kind),
      points_(std::move(points)),
      tree_(std::move(tree)),
      threshold_(threshold),
      scan_(scan),
      gamma_(gamma),
      source_indices_(std::move(source_indices)),
      incident_(points_.size()) {
    if (tree_.node_count != points_.size()) {
        throw ParameterError("descriptor tree has " + std::to_string(tree_.node_count) + " nodes but " +
                             std::to_string(points_.size()) + " points");
    }
    for (std::size_t i = 0; i < tree_.edges.size(); ++i) {
        const auto& e = tree_.edges[i];
        if (e.u >= points_.size() || e.v >= points_.size()) {
            throw ParameterError("descriptor edge references a node outside its point set");
        }
        incident_[e.u].push_back(i);
        incident_[e.v].push_back(i);
    }
}

std::vector<std::size_t> nearest_indices(std::span<const double> distances, std::size_t count) {
    std::vector<std::size_t> idx(distances.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    count = std::min(count, idx.size());
    const auto closer = [&](std::size_t a, std::size_t b) {
        if (distances[a] != distances[b]) return distances[a] < distances[b];
        return a < b;
    };
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(), closer);
    idx.resize(count);
    return idx;
}

namespace {

std::vector<NodeDistance> sorted_node_distances(std::span<const double> distances) {
    std::vector<NodeDistance> out(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) out[i] = NodeDistance{i, distances[i]};
    std::sort(out.begin(), out.end(), [](const NodeDistance& a, const NodeDistance& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.node < b.node;
    });
    return out;
}

double edge_distance(const TrainedDescriptor& desc, PointView x, const Edge& e) {
    return distance_to_edge(x, desc.points()[e.u], desc.points()[e.v]);
}

void require_query_dim(const TrainedDescriptor& desc, PointView x) {
    if (x.size() != desc.points().dim()) throw DimensionMismatch(desc.points().dim(), x.size());
}

std::size_t effective_gamma(std::size_t gamma, std::size_t n) {
    if (gamma < 2) throw ParameterError("gamma must be at least 2, got " + std::to_string(gamma));
    if (n < 2) throw ParameterError("local descriptor needs at least 2 points, got " + std::to_string(n));
    return std::min(gamma, n);
}

void require_distances(const PointSet& points, std::span<const double> distances_to_x) {
    if (distances_to_x.size() != points.size()) {
        throw ParameterError("distance vector length " + std::to_string(distances_to_x.size()) +
                             " does not match point count " + std::to_string(points.size()));
    }
}

}  // namespace

TrainedDescriptor train_full_mst(PointSet points, double alpha, ScanMode scan) {
    if (points.size() < 2) {
        throw ParameterError("full MST descriptor needs at least 2 points, got " + std::to_string(points.size()));
    }
    SpanningTree tree = prim_spanning_tree(points);
    const Threshold threshold = compute_threshold(tree, alpha);
    return TrainedDescriptor(DescriptorKind::FullMST, std::move(points), std::move(tree), threshold, scan, 0, {});
}

QueryEvaluation evaluate_full_mst(const TrainedDescriptor& desc, PointView x) {
    if (desc.kind() != DescriptorKind::FullMST) throw ParameterError("evaluate_full_mst on a local descriptor");
    require_query_dim(desc, x);

    const std::vector<double> dist = distances_to_points(desc.points(), x);
    QueryEvaluation q;
    q.per_node_distances = sorted_node_distances(dist);
    q.nearest_node = q.per_node_distances.front().node;

    double best = std::numeric_limits<double>::infinity();
    const auto& edges = desc.tree().edges;
    if (desc.scan_mode() == ScanMode::AllEdges) {
        for (const auto& e : edges) best = std::min(best, edge_distance(desc, x, e));
    } else {
        for (std::size_t ei : desc.incident_edges(q.nearest_node)) {
            best = std::min(best, edge_distance(desc, x, edges[ei]));
        }
    }
    q.distance = std::min(best, dist[q.nearest_node]);
    q.accepted = desc.accepts(q.distance);
    return q;
}

TrainedDescriptor build_small_mst_from_distances(const PointSet& points, std::span<const double> distances_to_x,
                                  std::size_t gamma, double alpha) {
    require_distances(points, distances_to_x);
    const std::size_t g = effective_gamma(gamma, points.size());

    std::vector<std::size_t> selected = nearest_indices(distances_to_x, g);
    std::sort(selected.begin(), selected.end());
    PointSet local = points.subset(selected);
    SpanningTree tree = minimum_spanning_tree(complete_graph(local));
    const Threshold threshold = compute_threshold(tree, alpha);
    return TrainedDescriptor(DescriptorKind::SmallMST, std::move(local), std::move(tree), threshold,
                             ScanMode::AllEdges, g, std::move(selected));
}

TrainedDescriptor build_small_mst(const PointSet& points, PointView x, std::size_t gamma, double alpha) {
    return build_small_mst_from_distances(points, distances_to_points(points, x), gamma, alpha);
}

TrainedDescriptor build_nary_from_distances(const PointSet& points, std::span<const double> distances_to_x, std::size_t gamma,
                             double alpha) {
    require_distances(points, distances_to_x);
    const std::size_t g = effective_gamma(gamma, points.size());

    const std::size_t root = nearest_indices(distances_to_x, 1).front();
    std::vector<double> from_root = distances_to_points(points, points[root]);
    // Push the root itself behind every real neighbour, including exact duplicates.
    from_root[root] = std::numeric_limits<double>::infinity();
    const std::vector<std::size_t> children = nearest_indices(from_root, g - 1);

    std::vector<std::size_t> members;
    members.reserve(g);
    members.push_back(root);
    members.insert(members.end(), children.begin(), children.end());

    SpanningTree star;
    star.node_count = members.size();
    for (std::size_t j = 1; j < members.size(); ++j) star.edges.push_back(Edge{0, j, from_root[members[j]]});
    const Threshold threshold = compute_threshold(star, alpha);
    PointSet local = points.subset(members);
    return TrainedDescriptor(DescriptorKind::NAry, std::move(local), std::move(star), threshold,
                             ScanMode::AllEdges, g, std::move(members));
}

TrainedDescriptor build_nary(const PointSet& points, PointView x, std::size_t gamma, double alpha) {
    return build_nary_from_distances(points, distances_to_points(points, x), gamma, alpha);
}

QueryEvaluation evaluate_local(const TrainedDescriptor& desc, PointView x) {
    if (desc.kind() == DescriptorKind::FullMST) throw ParameterError("evaluate_local on a full MST descriptor");
    require_query_dim(desc, x);

    const std::vector<double> dist = distances_to_points(desc.points(), x);
    QueryEvaluation q;
    q.per_node_distances = sorted_node_distances(dist);
    q.nearest_node = q.per_node_distances.front().node;
    double best = dist[q.nearest_node];
    for (const auto& e : desc.tree().edges) best = std::min(best, edge_distance(desc, x, e));
    q.distance = best;
    q.accepted = desc.accepts(q.distance);
    return q;
}

QueryEvaluation evaluate(const TrainedDescriptor& desc, PointView x) {
    return desc.kind() == DescriptorKind::FullMST ? evaluate_full_mst(desc, x) : evaluate_local(desc, x);
}

void write_descriptor(std::ostream& os, const TrainedDescriptor& desc) {
    const auto& pts = desc.points();
    os << "# descriptor " << to_string(desc.kind()) << '\n';
    os << "# scan " << to_string(desc.scan_mode()) << '\n';
    os << "# gamma " << desc.gamma() << '\n';
    os << "# threshold " << std::setprecision(17) << desc.threshold().value << '\n';
    os << "# points " << pts.size() << ' ' << pts.dim() << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PointView p = pts[i];
        for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << std::setprecision(17) << p[k];
        os << '\n';
    }
    os << "# sources";
    for (std::size_t s : desc.source_indices()) os << ' ' << s;
    os << '\n';
    write_tree(os, desc.tree(), desc.threshold().alpha);
}

TrainedDescriptor read_descriptor(std::istream& is) {
    const auto header = [&](const std::string& key) {
        std::string line;
        if (!std::getline(is, line)) throw DataError("descriptor dump truncated before '# " + key + "'");
        std::istringstream ls(line);
        std::string hash, got;
        ls >> hash >> got;
        if (hash != "#" || got != key) throw DataError("descriptor dump: expected '# " + key + "', got '" + line + "'");
        std::string rest;
        std::getline(ls, rest);
        return rest;
    };

    const auto word = [](const std::string& s) {
        std::string w;
        std::istringstream(s) >> w;
        return w;
    };
    const DescriptorKind kind = descriptor_kind_from_string(word(header("descriptor")));
    const ScanMode scan = scan_mode_from_string(word(header("scan")));
    const std::size_t gamma = std::stoul(header("gamma"));
    const double stored_threshold = std::stod(header("threshold"));

    std::istringstream dims(header("points"));
    std::size_t n = 0, d = 0;
    if (!(dims >> n >> d)) throw DataError("descriptor dump: malformed '# points' header");
    PointSet pts(d);
    pts.reserve(n);
    FeatureVector row(d);
    for (std::size_t i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw DataError("descriptor dump truncated in point block");
        std::istringstream ls(line);
        for (std::size_t k = 0; k < d; ++k) {
            if (!(ls >> row[k])) throw DataError("descriptor dump: malformed point row " + std::to_string(i));
        }
        pts.push_back(row);
    }

    std::istringstream src(header("sources"));
    std::vector<std::size_t> sources;
    for (std::size_t s; src >> s;) sources.push_back(s);

    double alpha = 0.5;
    SpanningTree tree = read_tree(is, &alpha);
    const Threshold threshold = compute_threshold(tree, alpha);
    if (threshold.value != stored_threshold) {
        throw DataError("descriptor dump: stored threshold disagrees with tree and alpha");
    }
    return TrainedDescriptor(kind, std::move(pts), std::move(tree), threshold, scan, gamma, std::move(sources));
}

}  // namespace mstcd
