#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mstcd/evaluation.hpp"

namespace mstcd {

// Ordered "key: value" lines written as '#' comments at the top of every
// output file. Carries every effective parameter needed to replay a run.
using ReportHeader = std::vector<std::pair<std::string, std::string>>;

std::string format_fixed3(double v);
std::string format_full(double v);

void write_header(std::ostream& os, const ReportHeader& header);

// Human-readable per-fold table (three decimals) with an average row.
void write_table(std::ostream& os, const RunReport& report);

// One row per fold plus an "average" row, full precision.
void write_fold_csv(std::ostream& os, const RunReport& report);

// One row per classified sample, ordered by fold then sample index.
void write_decision_log(std::ostream& os, const RunReport& report);

// Accuracy-vs-gamma table with per-class averages, one row per gamma.
void write_sweep_table(std::ostream& os, const SweepResult& sweep);

// Two tab-separated columns: gamma, average accuracy.
void write_sweep_plot(std::ostream& os, const SweepResult& sweep);

}  // namespace mstcd
