#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "mstcd/error.hpp"
#include "mstcd/evaluation.hpp"
#include "mstcd/manifest.hpp"
#include "mstcd/report.hpp"

#ifndef MSTCD_DEFAULT_DATA_DIR
#define MSTCD_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace mstcd::cli {

namespace {

// Config errors that must surface as exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct DataOptions {
    std::string dataset;
    std::string data_path;
    std::string data_dir;
    std::string manifest;
    std::string label_col;
    std::string delimiter;
    std::string missing;
    std::optional<bool> header;
};

struct RunOptions {
    std::string model = "mst-cd";
    std::optional<double> alpha;
    std::optional<std::size_t> k;
    std::string gamma;
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    std::string scan = "incident";
    std::size_t jobs = 0;
    std::string out;
    std::string decisions_log;
};

struct ResolvedData {
    fs::path path;
    CsvOptions csv;
    std::optional<DatasetEntry> entry;
    std::string display_name;
};

void add_data_options(CLI::App& cmd, DataOptions& d) {
    cmd.add_option("--dataset", d.dataset, "Dataset name from the built-in or --manifest list");
    cmd.add_option("--data-path", d.data_path, "Explicit path to a delimited data file");
    cmd.add_option("--data-dir", d.data_dir, "Directory holding dataset files (default $MSTCD_DATA_DIR)");
    cmd.add_option("--manifest", d.manifest, "Key-value manifest file describing datasets");
    cmd.add_option("--label-col", d.label_col, "Label column: last, 0-based index, or header name");
    cmd.add_option("--delimiter", d.delimiter, "Field delimiter: a single character, tab, or whitespace");
    cmd.add_option("--missing", d.missing, "Token marking a missing cell (default ?)");
    cmd.add_option("--header", d.header, "First row is a header (true/false)");
}

void add_run_options(CLI::App& cmd, RunOptions& r) {
    cmd.add_option("--model", r.model, "mst-cd, mst-cd-gp or n-ary")
        ->check(CLI::IsMember({"mst-cd", "mst-cd-gp", "n-ary"}));
    cmd.add_option("--alpha", r.alpha, "Threshold quantile in [0,1]");
    cmd.add_option("--k", r.k, "Neighbours in the tie-break vote");
    cmd.add_option("--gamma", r.gamma, "Neighbourhood size; sweep accepts 2..30 or 3,4,6");
    cmd.add_option("--folds", r.folds, "Cross-validation folds")->capture_default_str();
    cmd.add_option("--seed", r.seed, "Fold shuffling seed")->capture_default_str();
    cmd.add_option("--scan", r.scan, "Full-MST edge scan: incident or all")
        ->check(CLI::IsMember({"incident", "all"}))
        ->capture_default_str();
    cmd.add_option("--jobs", r.jobs, "Worker threads (0 = all cores, 1 = serial)");
    cmd.add_option("--out", r.out, "Directory for report files");
}

std::string delimiter_text(const CsvOptions& c) {
    if (c.whitespace) return "whitespace";
    if (c.delimiter == '\t') return "tab";
    return std::string(1, c.delimiter);
}

std::optional<DatasetEntry> lookup(const std::string& name, const std::vector<DatasetEntry>& manifest) {
    std::string key = name;
    for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& e : manifest) {
        if (e.name == key) return e;
    }
    return find_builtin(name);
}

ResolvedData resolve_data(const DataOptions& d) {
    std::vector<DatasetEntry> manifest;
    if (!d.manifest.empty()) {
        std::ifstream in(d.manifest);
        if (!in) throw UsageError("manifest file not found: " + d.manifest);
        manifest = parse_manifest(in);
    }

    ResolvedData r;
    if (!d.dataset.empty()) {
        r.entry = lookup(d.dataset, manifest);
        if (!r.entry && d.data_path.empty()) {
            throw UsageError("unknown dataset '" + d.dataset + "'; give --data-path or a --manifest entry");
        }
    } else if (d.data_path.empty()) {
        throw UsageError("one of --dataset or --data-path is required");
    }

    if (r.entry) r.csv = r.entry->csv;
    if (!d.data_path.empty()) {
        r.path = d.data_path;
    } else {
        std::string dir = d.data_dir;
        if (dir.empty()) {
            const char* env = std::getenv("MSTCD_DATA_DIR");
            dir = env != nullptr && *env != '\0' ? env : MSTCD_DEFAULT_DATA_DIR;
        }
        const fs::path file(r.entry->file);
        r.path = file.is_absolute() ? file : fs::path(dir) / file;
    }

    if (!d.label_col.empty()) r.csv.label = LabelColumn::parse(d.label_col);
    if (!d.missing.empty()) r.csv.missing_token = d.missing;
    if (d.header) r.csv.header = *d.header;
    if (!d.delimiter.empty()) {
        r.csv.whitespace = d.delimiter == "whitespace" || d.delimiter == "space";
        if (d.delimiter == "tab") r.csv.delimiter = '\t';
        else if (!r.csv.whitespace && d.delimiter.size() == 1) r.csv.delimiter = d.delimiter[0];
        else if (!r.csv.whitespace) throw UsageError("bad --delimiter '" + d.delimiter + "'");
    }
    r.display_name = r.entry ? r.entry->name : r.path.stem().string();

    if (!fs::exists(r.path)) throw UsageError("dataset file not found: " + r.path.string());
    return r;
}

Dataset load(const ResolvedData& r) {
    Dataset ds = impute_missing(load_csv(r.path, r.csv));
    ds.name = r.display_name;
    return ds;
}

ExperimentConfig make_config(const RunOptions& o, const ResolvedData& data, bool needs_single_gamma) {
    ExperimentConfig cfg;
    cfg.model.kind = model_kind_from_string(o.model);
    cfg.model.alpha = o.alpha.value_or(data.entry ? data.entry->alpha : 0.5);
    cfg.model.k = o.k.value_or(data.entry ? data.entry->k : 1);
    cfg.model.scan = scan_mode_from_string(o.scan);
    cfg.folds = o.folds;
    cfg.seed = o.seed;
    cfg.jobs = o.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.jobs;

    if (!(cfg.model.alpha >= 0.0 && cfg.model.alpha <= 1.0)) throw UsageError("--alpha must lie in [0, 1]");
    if (cfg.model.k < 1) throw UsageError("--k must be at least 1");
    if (cfg.folds < 2) throw UsageError("--folds must be at least 2");
    if (needs_single_gamma && cfg.model.kind != ModelKind::MstCd) {
        if (o.gamma.empty()) throw UsageError("model " + o.model + " requires --gamma");
        const auto g = parse_gamma_list(o.gamma);
        if (g.size() != 1) throw UsageError("evaluate takes a single --gamma value; use sweep for lists");
        cfg.model.gamma = g.front();
    }
    return cfg;
}

ReportHeader make_header(const std::string& command, const ResolvedData& data, const Dataset& ds,
                         const ExperimentConfig& cfg, const std::string& gamma_text) {
    ReportHeader h;
    h.emplace_back("command", "mstcd " + command);
    h.emplace_back("dataset", ds.name);
    h.emplace_back("data-path", data.path.string());
    h.emplace_back("label-col", data.csv.label.to_string());
    h.emplace_back("delimiter", delimiter_text(data.csv));
    h.emplace_back("header", data.csv.header ? "true" : "false");
    h.emplace_back("missing", data.csv.missing_token);
    h.emplace_back("model", to_string(cfg.model.kind));
    h.emplace_back("alpha", format_full(cfg.model.alpha));
    h.emplace_back("k", std::to_string(cfg.model.k));
    h.emplace_back("gamma", gamma_text);
    h.emplace_back("folds", std::to_string(cfg.folds));
    h.emplace_back("seed", std::to_string(cfg.seed));
    h.emplace_back("scan", to_string(cfg.model.scan));
    h.emplace_back("label-map", "0=" + ds.label_names[0] + " 1=" + ds.label_names[1]);
    h.emplace_back("instances", std::to_string(ds.size()));
    h.emplace_back("features", std::to_string(ds.feature_count()));
    h.emplace_back("imputed-cells", std::to_string(ds.imputed_cells));

    std::ostringstream replay;
    replay << "mstcd " << command;
    if (data.entry) replay << " --dataset " << data.entry->name;
    replay << " --data-path '" << data.path.string() << "' --label-col '"
           << data.csv.label.to_string() << "' --delimiter '" << delimiter_text(data.csv) << "' --header "
           << (data.csv.header ? "true" : "false") << " --missing '" << data.csv.missing_token << "' --model "
           << to_string(cfg.model.kind) << " --alpha " << format_full(cfg.model.alpha) << " --k " << cfg.model.k;
    if (cfg.model.kind != ModelKind::MstCd) replay << " --gamma " << gamma_text;
    replay << " --folds " << cfg.folds << " --seed " << cfg.seed << " --scan " << to_string(cfg.model.scan);
    h.emplace_back("replay", replay.str());
    return h;
}

void write_published(std::ostream& os, const std::optional<DatasetEntry>& entry) {
    if (!entry || (entry->reference.empty() && entry->baselines.empty())) return;
    os << "published accuracies (external, not computed by this run):\n";
    for (const auto& r : entry->reference) os << "  reference " << r.method << ": " << r.percent << "%\n";
    for (const auto& b : entry->baselines) os << "  baseline [" << b.group << "] " << b.method << ": " << b.percent << "%\n";
}

void ensure_dir(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create output directory " + dir + ": " + ec.message());
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p);
    if (!f) throw UsageError("cannot write " + p.string());
    return f;
}

int cmd_evaluate(const DataOptions& d, const RunOptions& o, std::ostream& out, std::ostream& err) {
    const ResolvedData data = resolve_data(d);
    // Parameter validation precedes the (possibly slow) load.
    ExperimentConfig cfg = make_config(o, data, true);
    const Dataset ds = load(data);

    const auto start = std::chrono::steady_clock::now();
    const RunReport report = run_cv(ds, cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string gamma_text = cfg.model.kind == ModelKind::MstCd ? "-" : std::to_string(cfg.model.gamma);
    const ReportHeader header = make_header("evaluate", data, ds, cfg, gamma_text);

    std::ostringstream text;
    write_header(text, header);
    write_table(text, report);
    write_published(text, data.entry);
    out << text.str();

    if (!o.out.empty()) {
        ensure_dir(o.out);
        auto f = open_out(fs::path(o.out) / "report.txt");
        f << text.str();
        auto csv = open_out(fs::path(o.out) / "folds.csv");
        write_header(csv, header);
        write_fold_csv(csv, report);
    }
    if (!o.decisions_log.empty()) {
        auto log = open_out(o.decisions_log);
        write_header(log, header);
        write_decision_log(log, report);
    }
    err << "evaluate finished in " << format_fixed3(seconds) << " s\n";
    return kOk;
}

int cmd_sweep(const DataOptions& d, const RunOptions& o, std::ostream& out, std::ostream& err) {
    if (o.model == "mst-cd") throw UsageError("sweep requires --model mst-cd-gp or n-ary");
    if (o.gamma.empty()) throw UsageError("sweep requires --gamma (e.g. 2..30)");
    const ResolvedData data = resolve_data(d);
    ExperimentConfig cfg = make_config(o, data, false);
    const std::vector<std::size_t> gammas = parse_gamma_list(o.gamma);
    const Dataset ds = load(data);

    const auto start = std::chrono::steady_clock::now();
    const SweepResult sweep = sweep_gamma(ds, cfg, gammas);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const ReportHeader header = make_header("sweep", data, ds, cfg, o.gamma);
    std::ostringstream text;
    write_header(text, header);
    write_sweep_table(text, sweep);
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        for (const auto& w : sweep.reports[i].warnings) {
            text << "warning (gamma " << sweep.gammas[i] << "): " << w << '\n';
        }
    }
    write_published(text, data.entry);
    out << text.str();

    if (!o.out.empty()) {
        ensure_dir(o.out);
        auto f = open_out(fs::path(o.out) / "sweep.txt");
        f << text.str();
        auto plot = open_out(fs::path(o.out) / "sweep_plot.tsv");
        write_header(plot, header);
        write_sweep_plot(plot, sweep);
    }
    err << "sweep finished in " << format_fixed3(seconds) << " s\n";
    return kOk;
}

int cmd_inspect(const DataOptions& d, std::ostream& out) {
    const ResolvedData data = resolve_data(d);
    const Dataset raw = load_csv(data.path, data.csv);
    const std::size_t missing = raw.missing.size();
    const Dataset ds = impute_missing(raw);
    const auto counts = ds.class_counts();

    out << "dataset: " << data.display_name << " (" << data.path.string() << ")\n";
    out << ds.feature_count() << " features, " << ds.size() << " instances, " << counts[0] << "-" << counts[1] << '\n';
    out << "classes: 0=" << ds.label_names[0] << " (" << counts[0] << "), 1=" << ds.label_names[1] << " ("
        << counts[1] << ")\n";
    out << "missing cells: " << missing << '\n';
    if (data.entry) {
        out << "defaults: alpha " << format_full(data.entry->alpha) << ", k " << data.entry->k << '\n';
        for (const auto& note : check_against_manifest(ds, *data.entry)) out << "note: " << note << '\n';
    }
    return kOk;
}

}  // namespace

std::vector<std::size_t> parse_gamma_list(const std::string& text) {
    const auto to_size = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad gamma value '" + s + "' in '" + text + "'");
        }
        if (pos != s.size() || s.empty() || s[0] == '-') throw UsageError("bad gamma value '" + s + "' in '" + text + "'");
        return v;
    };

    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = to_size(text.substr(0, dots));
        const std::size_t hi = to_size(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty gamma range '" + text + "'");
        for (std::size_t g = lo; g <= hi; ++g) out.push_back(g);
    } else {
        std::stringstream ss(text);
        for (std::string part; std::getline(ss, part, ',');) out.push_back(to_size(part));
    }
    if (out.empty()) throw UsageError("empty gamma list");
    for (std::size_t g : out) {
        if (g < 2) throw UsageError("gamma values must be >= 2 (got " + std::to_string(g) + ")");
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary classification from pairs of one-class tree descriptors"};
    app.name("mstcd");
    app.require_subcommand(1);

    DataOptions eval_data, sweep_data, inspect_data;
    RunOptions eval_run, sweep_run;

    auto* evaluate = app.add_subcommand("evaluate", "Cross-validate one model configuration");
    add_data_options(*evaluate, eval_data);
    add_run_options(*evaluate, eval_run);
    evaluate->add_option("--decisions-log", eval_run.decisions_log, "Write per-query decisions to this file");

    auto* sweep = app.add_subcommand("sweep", "Cross-validate a local model over a list of gamma values");
    add_data_options(*sweep, sweep_data);
    add_run_options(*sweep, sweep_run);

    auto* inspect = app.add_subcommand("inspect", "Summarize a dataset file");
    add_data_options(*inspect, inspect_data);

    std::vector<const char*> argv;
    argv.push_back("mstcd");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (evaluate->parsed()) return cmd_evaluate(eval_data, eval_run, out, err);
        if (sweep->parsed()) return cmd_sweep(sweep_data, sweep_run, out, err);
        if (inspect->parsed()) return cmd_inspect(inspect_data, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

}  // namespace mstcd::cli
