#include "mstcd/combiner.hpp"

#include <algorithm>

#include "mstcd/error.hpp"

namespace mstcd {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::MstCd: return "mst-cd";
        case ModelKind::MstCdGp: return "mst-cd-gp";
        case ModelKind::NAry: return "n-ary";
    }
    return "unknown";
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "mst-cd") return ModelKind::MstCd;
    if (s == "mst-cd-gp") return ModelKind::MstCdGp;
    if (s == "n-ary") return ModelKind::NAry;
    throw ParameterError("unknown model '" + s + "' (expected mst-cd, mst-cd-gp or n-ary)");
}

std::string to_string(DecisionPath path) {
    switch (path) {
        case DecisionPath::SingleAccept: return "single-accept";
        case DecisionPath::BothAccept: return "both-accept";
        case DecisionPath::BothReject: return "both-reject";
    }
    return "unknown";
}

Vote knn_tiebreak(std::span<const double> sorted_class0, std::span<const double> sorted_class1, std::size_t k) {
    if (k == 0) throw ParameterError("k must be at least 1");
    if (k > sorted_class0.size() || k > sorted_class1.size()) {
        throw ParameterError("k = " + std::to_string(k) + " exceeds class sizes (" +
                             std::to_string(sorted_class0.size()) + ", " + std::to_string(sorted_class1.size()) + ")");
    }
    Vote vote;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = sorted_class1[i] - sorted_class0[i];
        if (r < 0.0) ++vote.detail.negative_count;
        else if (r > 0.0) ++vote.detail.positive_count;
    }
    vote.label = vote.detail.negative_count >= vote.detail.positive_count ? 1 : 0;
    return vote;
}

namespace {

std::vector<double> k_smallest(std::span<const double> distances, std::size_t k) {
    std::vector<double> out(distances.begin(), distances.end());
    k = std::min(k, out.size());
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
    out.resize(k);
    return out;
}

std::vector<double> k_smallest(const QueryEvaluation& q, std::size_t k) {
    std::vector<double> out;
    k = std::min(k, q.per_node_distances.size());
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(q.per_node_distances[i].distance);
    return out;
}

}  // namespace

Vote knn_tiebreak(PointView x, const PointSet& class0, const PointSet& class1, std::size_t k) {
    return knn_tiebreak(k_smallest(distances_to_points(class0, x), k),
                        k_smallest(distances_to_points(class1, x), k), k);
}

PairwiseModel::PairwiseModel(ModelParams params, std::array<PointSet, 2> points,
                             std::vector<TrainedDescriptor> descriptors)
    : params_(params), class_points_(std::move(points)), descriptors_(std::move(descriptors)) {}

PairwiseModel PairwiseModel::train(PointSet class0, PointSet class1, const ModelParams& params,
                                   std::vector<std::string>* warnings) {
    const std::size_t n0 = class0.size();
    const std::size_t n1 = class1.size();
    if (n0 < 2 || n1 < 2) {
        throw ParameterError("each class needs at least 2 training points (got " + std::to_string(n0) + ", " +
                             std::to_string(n1) + ")");
    }
    if (class0.dim() != class1.dim()) throw DimensionMismatch(class0.dim(), class1.dim());
    if (params.k == 0) throw ParameterError("k must be at least 1");

    ModelParams effective = params;
    const std::size_t k_cap = std::min(n0, n1);
    if (effective.k > k_cap) {
        if (warnings != nullptr) {
            warnings->push_back("k clamped from " + std::to_string(effective.k) + " to " + std::to_string(k_cap));
        }
        effective.k = k_cap;
    }

    if (effective.kind == ModelKind::MstCd) {
        std::vector<TrainedDescriptor> descriptors;
        descriptors.reserve(2);
        descriptors.push_back(train_full_mst(std::move(class0), effective.alpha, effective.scan));
        descriptors.push_back(train_full_mst(std::move(class1), effective.alpha, effective.scan));
        return PairwiseModel(effective, {}, std::move(descriptors));
    }

    if (effective.gamma < 2) {
        throw ParameterError("model " + to_string(effective.kind) + " requires gamma >= 2");
    }
    // Validates alpha.
    (void)threshold_index(1, effective.alpha);
    for (std::size_t n : {n0, n1}) {
        if (effective.gamma > n && warnings != nullptr) {
            warnings->push_back("gamma " + std::to_string(effective.gamma) + " exceeds class size " +
                                std::to_string(n) + "; clamped per class");
        }
    }
    return PairwiseModel(effective, {std::move(class0), std::move(class1)}, {});
}

const PointSet& PairwiseModel::class_points(int label) const {
    if (!descriptors_.empty()) return descriptor(label).points();
    return class_points_.at(static_cast<std::size_t>(label));
}

const TrainedDescriptor& PairwiseModel::descriptor(int label) const {
    if (descriptors_.empty()) throw ParameterError("local models build descriptors per query");
    return descriptors_.at(static_cast<std::size_t>(label));
}

Decision PairwiseModel::classify(PointView x) const {
    std::array<QueryEvaluation, 2> eval;
    std::array<std::vector<double>, 2> nearest;
    std::array<double, 2> theta{};

    if (params_.kind == ModelKind::MstCd) {
        for (int c = 0; c < 2; ++c) {
            const auto& desc = descriptors_[static_cast<std::size_t>(c)];
            eval[c] = evaluate_full_mst(desc, x);
            theta[c] = desc.threshold().value;
            nearest[c] = k_smallest(eval[c], params_.k);
        }
    } else {
        for (std::size_t c = 0; c < 2; ++c) {
            const PointSet& pts = class_points_[c];
            const std::vector<double> dist = distances_to_points(pts, x);
            const TrainedDescriptor desc = params_.kind == ModelKind::MstCdGp
                                               ? build_small_mst_from_distances(pts, dist, params_.gamma, params_.alpha)
                                               : build_nary_from_distances(pts, dist, params_.gamma, params_.alpha);
            eval[c] = evaluate_local(desc, x);
            theta[c] = desc.threshold().value;
            nearest[c] = k_smallest(dist, params_.k);
        }
    }

    Decision d;
    d.distance = {eval[0].distance, eval[1].distance};
    d.threshold = theta;
    const bool accept0 = eval[0].accepted;
    const bool accept1 = eval[1].accepted;
    if (accept0 != accept1) {
        d.label = accept0 ? 0 : 1;
        d.path = DecisionPath::SingleAccept;
        return d;
    }
    const Vote vote = knn_tiebreak(nearest[0], nearest[1], params_.k);
    d.label = vote.label;
    d.path = accept0 ? DecisionPath::BothAccept : DecisionPath::BothReject;
    d.vote = vote.detail;
    return d;
}

}  // namespace mstcd
