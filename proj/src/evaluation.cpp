#include "mstcd/evaluation.hpp"

#include <optional>

#include "mstcd/error.hpp"
#include "parallel.hpp"

namespace mstcd {

void ConfusionMatrix::add(int truth, int predicted) {
    if (truth == 1) {
        if (predicted == 1) ++tp;
        else ++fn;
    } else {
        if (predicted == 1) ++fp;
        else ++tn;
    }
}

namespace {

double ratio(std::size_t num, std::size_t den, bool& undefined) {
    undefined = den == 0;
    return undefined ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Metrics metrics_from_confusion(const ConfusionMatrix& cm) {
    const std::size_t total = cm.total();
    if (total == 0) throw ParameterError("metrics of an empty confusion matrix");

    // correct[c], actual[c], predicted[c]
    const std::array<std::size_t, 2> correct{cm.tn, cm.tp};
    const std::array<std::size_t, 2> actual{cm.tn + cm.fp, cm.tp + cm.fn};
    const std::array<std::size_t, 2> predicted{cm.tn + cm.fn, cm.tp + cm.fp};

    Metrics m;
    for (std::size_t c = 0; c < 2; ++c) {
        m.sensitivity[c] = ratio(correct[c], actual[c], m.sensitivity_undefined[c]);
        m.precision[c] = ratio(correct[c], predicted[c], m.precision_undefined[c]);
        const double sum = m.sensitivity[c] + m.precision[c];
        m.f1_undefined[c] = m.sensitivity_undefined[c] || m.precision_undefined[c] || sum == 0.0;
        m.f1[c] = m.f1_undefined[c] ? 0.0 : 2.0 * m.sensitivity[c] * m.precision[c] / sum;
    }
    m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
    return m;
}

Metrics average_metrics(std::span<const Metrics> values) {
    Metrics avg;
    if (values.empty()) return avg;
    const double n = static_cast<double>(values.size());
    for (const auto& m : values) {
        for (std::size_t c = 0; c < 2; ++c) {
            avg.sensitivity[c] += m.sensitivity[c];
            avg.precision[c] += m.precision[c];
            avg.f1[c] += m.f1[c];
            avg.sensitivity_undefined[c] = avg.sensitivity_undefined[c] || m.sensitivity_undefined[c];
            avg.precision_undefined[c] = avg.precision_undefined[c] || m.precision_undefined[c];
            avg.f1_undefined[c] = avg.f1_undefined[c] || m.f1_undefined[c];
        }
        avg.accuracy += m.accuracy;
    }
    for (std::size_t c = 0; c < 2; ++c) {
        avg.sensitivity[c] /= n;
        avg.precision[c] /= n;
        avg.f1[c] /= n;
    }
    avg.accuracy /= n;
    return avg;
}

RunReport run_cv(const Dataset& dataset, const ExperimentConfig& config, const FoldPlan& plan) {
    if (!dataset.missing.empty()) {
        throw DataError("dataset '" + dataset.name + "' still has " + std::to_string(dataset.missing.size()) +
                        " missing cells; impute before evaluation");
    }
    if (plan.assignments.size() != dataset.size()) {
        throw ParameterError("fold plan covers " + std::to_string(plan.assignments.size()) + " samples, dataset has " +
                             std::to_string(dataset.size()));
    }
    const std::size_t k = plan.fold_count;

    RunReport report;
    report.dataset_name = dataset.name;
    report.label_names = dataset.label_names;
    report.config = config;
    report.config.folds = k;
    report.config.seed = plan.seed;

    std::vector<std::optional<PairwiseModel>> models(k);
    std::vector<std::vector<std::string>> fold_warnings(k);
    std::vector<std::array<std::size_t, 2>> train_counts(k);

    for (std::size_t f = 0; f < k; ++f) {
        std::array<std::size_t, 2> counts{0, 0};
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            if (plan.assignments[i] != f) ++counts[static_cast<std::size_t>(dataset.labels[i])];
        }
        for (std::size_t c = 0; c < 2; ++c) {
            if (counts[c] < 2) {
                throw DataError("fold " + std::to_string(f) + " leaves " + std::to_string(counts[c]) +
                                " training samples in class " + std::to_string(c) + " ('" + dataset.label_names[c] +
                                "'); at least 2 are required");
            }
        }
        train_counts[f] = counts;
    }

    detail::parallel_for(k, config.jobs, [&](std::size_t f) {
        std::array<PointSet, 2> split{PointSet(dataset.feature_count()), PointSet(dataset.feature_count())};
        for (std::size_t c = 0; c < 2; ++c) split[c].reserve(train_counts[f][c]);
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            if (plan.assignments[i] != f) split[static_cast<std::size_t>(dataset.labels[i])].push_back(dataset.samples[i]);
        }
        models[f].emplace(PairwiseModel::train(std::move(split[0]), std::move(split[1]), config.model, &fold_warnings[f]));
    });

    std::vector<Decision> decisions(dataset.size());
    detail::parallel_for(dataset.size(), config.jobs, [&](std::size_t i) {
        decisions[i] = models[plan.assignments[i]]->classify(dataset.samples[i]);
    });

    report.folds.resize(k);
    for (std::size_t f = 0; f < k; ++f) {
        auto& fr = report.folds[f];
        fr.fold = f;
        fr.train_counts = train_counts[f];
        for (const auto& w : fold_warnings[f]) report.warnings.push_back("fold " + std::to_string(f) + ": " + w);
    }
    report.config.model.k = models.front()->k();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        auto& fr = report.folds[plan.assignments[i]];
        fr.decisions.push_back(DecisionRecord{i, dataset.labels[i], decisions[i]});
        fr.confusion.add(dataset.labels[i], decisions[i].label);
    }
    std::vector<Metrics> per_fold;
    per_fold.reserve(k);
    for (auto& fr : report.folds) {
        if (fr.confusion.total() == 0) throw DataError("fold " + std::to_string(fr.fold) + " has no test samples");
        fr.metrics = metrics_from_confusion(fr.confusion);
        per_fold.push_back(fr.metrics);
    }
    report.averages = average_metrics(per_fold);
    return report;
}

RunReport run_cv(const Dataset& dataset, const ExperimentConfig& config) {
    return run_cv(dataset, config, make_folds(dataset, config.folds, config.seed));
}

SweepResult sweep_gamma(const Dataset& dataset, const ExperimentConfig& base, std::span<const std::size_t> gammas) {
    if (gammas.empty()) throw ParameterError("gamma sweep needs at least one value");
    for (std::size_t g : gammas) {
        if (g < 2) throw ParameterError("gamma values must be >= 2, got " + std::to_string(g));
    }
    if (base.model.kind == ModelKind::MstCd) throw ParameterError("gamma sweep requires mst-cd-gp or n-ary");

    const FoldPlan plan = make_folds(dataset, base.folds, base.seed);
    SweepResult result;
    result.gammas.assign(gammas.begin(), gammas.end());
    for (std::size_t g : gammas) {
        ExperimentConfig cfg = base;
        cfg.model.gamma = g;
        result.reports.push_back(run_cv(dataset, cfg, plan));
    }
    for (std::size_t i = 1; i < result.reports.size(); ++i) {
        if (result.reports[i].averages.accuracy > result.reports[result.best].averages.accuracy) result.best = i;
    }
    return result;
}

}  // namespace mstcd
