#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mstcd/descriptor.hpp"
#include "mstcd/geometry.hpp"

namespace mstcd {

enum class ModelKind {
    MstCd,    // one full MST per class, built at training time
    MstCdGp,  // per-query MST over the gamma nearest class points
    NAry,     // per-query star rooted at the nearest class point
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

enum class DecisionPath { SingleAccept, BothAccept, BothReject };

std::string to_string(DecisionPath path);

struct VoteDetail {
    std::size_t negative_count = 0;  // entries with class-1 distance below class-0 distance
    std::size_t positive_count = 0;

    friend bool operator==(const VoteDetail&, const VoteDetail&) = default;
};

struct Vote {
    int label = 1;
    VoteDetail detail;
};

struct Decision {
    int label = 0;
    DecisionPath path = DecisionPath::SingleAccept;
    std::optional<VoteDetail> vote;  // present only on the two anomaly paths
    std::array<double, 2> distance{};
    std::array<double, 2> threshold{};
};

struct ModelParams {
    ModelKind kind = ModelKind::MstCd;
    double alpha = 0.5;
    std::size_t k = 1;
    std::size_t gamma = 0;  // local kinds only
    ScanMode scan = ScanMode::IncidentEdges;
};

// Distance-difference vote over ascending distance lists. R = D1 - D0 over
// the first k entries; negative entries favour class 1, positive entries
// class 0, zeros neither. Label 1 iff negative_count >= positive_count.
Vote knn_tiebreak(std::span<const double> sorted_class0, std::span<const double> sorted_class1, std::size_t k);
Vote knn_tiebreak(PointView x, const PointSet& class0, const PointSet& class1, std::size_t k);

// Binary classifier assembled from one one-class descriptor per class.
class PairwiseModel {
public:
    // Clamps k to min(n0, n1) and gamma to each class size, appending a note
    // to `warnings` when it does.
    static PairwiseModel train(PointSet class0, PointSet class1, const ModelParams& params,
                               std::vector<std::string>* warnings = nullptr);

    const ModelParams& params() const noexcept { return params_; }
    std::size_t k() const noexcept { return params_.k; }
    const PointSet& class_points(int label) const;
    // Trained descriptors (MstCd only).
    const TrainedDescriptor& descriptor(int label) const;

    Decision classify(PointView x) const;

private:
    PairwiseModel(ModelParams params, std::array<PointSet, 2> points, std::vector<TrainedDescriptor> descriptors);

    ModelParams params_;
    std::array<PointSet, 2> class_points_;
    std::vector<TrainedDescriptor> descriptors_;
};

inline Decision classify(const PairwiseModel& model, PointView x) { return model.classify(x); }

}  // namespace mstcd
