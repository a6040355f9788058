#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mstcd/combiner.hpp"
#include "mstcd/dataset.hpp"

namespace mstcd {

// Class 1 is the positive class.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + fp + tn + fn; }
    void add(int truth, int predicted);

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Per-class metrics indexed by class label. A zero denominator yields 0 and
// sets the matching *_undefined flag.
struct Metrics {
    std::array<double, 2> sensitivity{};
    std::array<double, 2> precision{};
    std::array<double, 2> f1{};
    double accuracy = 0.0;
    std::array<bool, 2> sensitivity_undefined{};
    std::array<bool, 2> precision_undefined{};
    std::array<bool, 2> f1_undefined{};
};

Metrics metrics_from_confusion(const ConfusionMatrix& cm);

// Arithmetic mean of each field; a flag is set if any input had it set.
Metrics average_metrics(std::span<const Metrics> values);

struct DecisionRecord {
    std::size_t sample = 0;
    int truth = 0;
    Decision decision;
};

struct FoldReport {
    std::size_t fold = 0;
    std::array<std::size_t, 2> train_counts{};
    ConfusionMatrix confusion;
    Metrics metrics;
    std::vector<DecisionRecord> decisions;  // ascending sample index
};

struct ExperimentConfig {
    ModelParams model;
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    std::size_t jobs = 1;  // worker threads; results do not depend on it
};

struct RunReport {
    std::string dataset_name;
    std::array<std::string, 2> label_names;
    ExperimentConfig config;
    std::vector<FoldReport> folds;
    Metrics averages;
    std::vector<std::string> warnings;
};

RunReport run_cv(const Dataset& dataset, const ExperimentConfig& config);
RunReport run_cv(const Dataset& dataset, const ExperimentConfig& config, const FoldPlan& plan);

struct SweepResult {
    std::vector<std::size_t> gammas;
    std::vector<RunReport> reports;
    std::size_t best = 0;  // index of the highest average accuracy (first on ties)
};

// One run_cv per gamma over a single shared fold plan.
SweepResult sweep_gamma(const Dataset& dataset, const ExperimentConfig& base, std::span<const std::size_t> gammas);

}  // namespace mstcd
