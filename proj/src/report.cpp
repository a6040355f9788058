#include "mstcd/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace mstcd {

std::string format_fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_header(std::ostream& os, const ReportHeader& header) {
    for (const auto& [key, value] : header) os << "# " << key << ": " << value << '\n';
}

namespace {

std::string cell(double v, bool undefined) {
    std::string s = format_fixed3(v);
    s += undefined ? "*" : " ";
    return s;
}

void pad_to(std::ostream& os, const std::string& s, std::size_t width) {
    os << s;
    for (std::size_t i = s.size(); i < width; ++i) os << ' ';
}

void metric_cells(std::ostream& os, const Metrics& m) {
    constexpr std::size_t w = 14;
    pad_to(os, cell(m.sensitivity[0], m.sensitivity_undefined[0]), w);
    pad_to(os, cell(m.sensitivity[1], m.sensitivity_undefined[1]), w);
    pad_to(os, cell(m.precision[0], m.precision_undefined[0]), w);
    pad_to(os, cell(m.precision[1], m.precision_undefined[1]), w);
    pad_to(os, cell(m.f1[0], m.f1_undefined[0]), w);
    pad_to(os, cell(m.f1[1], m.f1_undefined[1]), w);
    os << format_fixed3(m.accuracy) << '\n';
}

void metric_header(std::ostream& os, const std::string& first) {
    constexpr std::size_t w = 14;
    pad_to(os, first, 10);
    for (const char* h : {"Sensitivity0", "Sensitivity1", "Precision0", "Precision1", "F1_0", "F1_1"}) pad_to(os, h, w);
    os << "Accuracy\n";
}

bool any_undefined(const Metrics& m) {
    for (std::size_t c = 0; c < 2; ++c) {
        if (m.sensitivity_undefined[c] || m.precision_undefined[c] || m.f1_undefined[c]) return true;
    }
    return false;
}

std::string undefined_flags(const Metrics& m) {
    std::string out;
    const auto add = [&](bool flag, const char* name) {
        if (!flag) return;
        if (!out.empty()) out += ';';
        out += name;
    };
    add(m.sensitivity_undefined[0], "sensitivity0");
    add(m.sensitivity_undefined[1], "sensitivity1");
    add(m.precision_undefined[0], "precision0");
    add(m.precision_undefined[1], "precision1");
    add(m.f1_undefined[0], "f1_0");
    add(m.f1_undefined[1], "f1_1");
    return out;
}

void csv_metrics(std::ostream& os, const Metrics& m) {
    os << format_full(m.sensitivity[0]) << ',' << format_full(m.sensitivity[1]) << ','
       << format_full(m.precision[0]) << ',' << format_full(m.precision[1]) << ',' << format_full(m.f1[0]) << ','
       << format_full(m.f1[1]) << ',' << format_full(m.accuracy);
}

std::string gamma_text(const ModelParams& p) {
    return p.kind == ModelKind::MstCd ? "-" : std::to_string(p.gamma);
}

}  // namespace

void write_table(std::ostream& os, const RunReport& report) {
    const auto& p = report.config.model;
    os << to_string(p.kind) << " on " << report.dataset_name << " (alpha " << format_full(p.alpha) << ", k " << p.k
       << ", gamma " << gamma_text(p) << ", scan " << to_string(p.scan) << ")\n";
    os << "class 0 = " << report.label_names[0] << ", class 1 = " << report.label_names[1] << '\n';
    metric_header(os, "Fold");
    bool flagged = false;
    for (const auto& f : report.folds) {
        pad_to(os, std::to_string(f.fold + 1), 10);
        metric_cells(os, f.metrics);
        flagged = flagged || any_undefined(f.metrics);
    }
    pad_to(os, "Average", 10);
    metric_cells(os, report.averages);
    if (flagged) os << "* undefined: zero denominator, reported as 0\n";
    for (const auto& w : report.warnings) os << "warning: " << w << '\n';
}

void write_fold_csv(std::ostream& os, const RunReport& report) {
    os << "fold,sensitivity0,sensitivity1,precision0,precision1,f1_0,f1_1,accuracy,tp,fp,tn,fn,undefined\n";
    for (const auto& f : report.folds) {
        os << f.fold + 1 << ',';
        csv_metrics(os, f.metrics);
        os << ',' << f.confusion.tp << ',' << f.confusion.fp << ',' << f.confusion.tn << ',' << f.confusion.fn << ','
           << undefined_flags(f.metrics) << '\n';
    }
    ConfusionMatrix total;
    for (const auto& f : report.folds) {
        total.tp += f.confusion.tp;
        total.fp += f.confusion.fp;
        total.tn += f.confusion.tn;
        total.fn += f.confusion.fn;
    }
    os << "average,";
    csv_metrics(os, report.averages);
    os << ',' << total.tp << ',' << total.fp << ',' << total.tn << ',' << total.fn << ','
       << undefined_flags(report.averages) << '\n';
}

void write_decision_log(std::ostream& os, const RunReport& report) {
    os << "sample,fold,true,predicted,path,d0,d1,theta0,theta1,negative,positive\n";
    for (const auto& f : report.folds) {
        for (const auto& r : f.decisions) {
            const auto& d = r.decision;
            os << r.sample << ',' << f.fold + 1 << ',' << r.truth << ',' << d.label << ',' << to_string(d.path) << ','
               << format_full(d.distance[0]) << ',' << format_full(d.distance[1]) << ','
               << format_full(d.threshold[0]) << ',' << format_full(d.threshold[1]) << ',';
            if (d.vote) os << d.vote->negative_count << ',' << d.vote->positive_count;
            else os << ',';
            os << '\n';
        }
    }
}

void write_sweep_table(std::ostream& os, const SweepResult& sweep) {
    if (sweep.reports.empty()) return;
    const auto& first = sweep.reports.front();
    const auto& p = first.config.model;
    os << to_string(p.kind) << " gamma sweep on " << first.dataset_name << " (alpha " << format_full(p.alpha)
       << ", k " << p.k << ", " << first.config.folds << " folds)\n";
    metric_header(os, "Gamma");
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        pad_to(os, std::to_string(sweep.gammas[i]) + (i == sweep.best ? " <" : ""), 10);
        metric_cells(os, sweep.reports[i].averages);
    }
    os << "best gamma " << sweep.gammas[sweep.best] << ": accuracy "
       << format_fixed3(sweep.reports[sweep.best].averages.accuracy) << '\n';
}

void write_sweep_plot(std::ostream& os, const SweepResult& sweep) {
    os << "gamma\taccuracy\n";
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        os << sweep.gammas[i] << '\t' << format_full(sweep.reports[i].averages.accuracy) << '\n';
    }
}

}  // namespace mstcd
