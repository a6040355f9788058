#include "mstcd/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "mstcd/error.hpp"

namespace mstcd {

namespace {

std::string_view trim(std::string_view s) {
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line, const CsvOptions& opt) {
    std::vector<std::string_view> out;
    if (opt.whitespace) {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(opt.delimiter, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

bool parse_double(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

// Uniform draw in [0, bound) from the raw engine output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = 0;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

}  // namespace

LabelColumn LabelColumn::parse(const std::string& text) {
    LabelColumn col;
    if (text.empty() || text == "last" || text == "-1") return col;
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
    if (ec == std::errc{} && ptr == text.data() + text.size()) {
        col.mode = Mode::Index;
        col.index = idx;
    } else {
        col.mode = Mode::Name;
        col.name = text;
    }
    return col;
}

std::string LabelColumn::to_string() const {
    switch (mode) {
        case Mode::Last: return "last";
        case Mode::Index: return std::to_string(index);
        case Mode::Name: return name;
    }
    return "last";
}

std::array<std::size_t, 2> Dataset::class_counts() const {
    std::array<std::size_t, 2> counts{0, 0};
    for (int l : labels) ++counts[static_cast<std::size_t>(l)];
    return counts;
}

Dataset parse_csv(std::istream& in, const CsvOptions& options, const std::string& name) {
    Dataset ds;
    ds.name = name;

    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    std::size_t label_col = 0;
    bool have_header = !options.header;
    bool have_width = false;
    std::vector<std::string> header_names;
    std::vector<double> row;

    const auto resolve_label_column = [&](std::size_t w) {
        switch (options.label.mode) {
            case LabelColumn::Mode::Last: return w - 1;
            case LabelColumn::Mode::Index:
                if (options.label.index >= w) {
                    throw DataError("label column " + std::to_string(options.label.index) + " out of range for " +
                                    std::to_string(w) + " columns");
                }
                return options.label.index;
            case LabelColumn::Mode::Name: {
                if (!options.header) throw DataError("label column given by name requires a header row");
                const auto it = std::find(header_names.begin(), header_names.end(), options.label.name);
                if (it == header_names.end()) throw DataError("label column '" + options.label.name + "' not in header");
                return static_cast<std::size_t>(it - header_names.begin());
            }
        }
        return w - 1;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const auto fields = split(line, options);

        if (!have_header) {
            for (auto f : fields) header_names.emplace_back(f);
            width = fields.size();
            have_width = true;
            label_col = resolve_label_column(width);
            have_header = true;
            continue;
        }
        if (!have_width) {
            width = fields.size();
            have_width = true;
            label_col = resolve_label_column(width);
        }
        if (width < 2) throw DataError("line " + std::to_string(line_no) + ": need at least one feature and a label");
        if (fields.size() != width) {
            throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                            " fields, got " + std::to_string(fields.size()));
        }

        const std::string label(fields[label_col]);
        if (label.empty()) throw DataError("line " + std::to_string(line_no) + ": empty label");
        int code = -1;
        for (int c = 0; c < 2 && code < 0; ++c) {
            auto& known = ds.label_names[static_cast<std::size_t>(c)];
            if (known.empty()) {
                known = label;
                code = c;
            } else if (known == label) {
                code = c;
            }
        }
        if (code < 0) {
            throw DataError("unsupported label cardinality: third class '" + label + "' on line " +
                            std::to_string(line_no) + " (only two classes are supported)");
        }

        row.clear();
        const std::size_t sample = ds.labels.size();
        for (std::size_t c = 0; c < width; ++c) {
            if (c == label_col) continue;
            const std::string_view cell = fields[c];
            double value = 0.0;
            if (cell.empty() || cell == options.missing_token) {
                ds.missing.push_back(CellRef{sample, row.size()});
                value = std::numeric_limits<double>::quiet_NaN();
            } else if (!parse_double(cell, value)) {
                throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(c) +
                                ": cannot parse '" + std::string(cell) + "' as a number");
            }
            row.push_back(value);
        }
        if (ds.samples.dim() == 0) ds.samples = PointSet(row.size());
        ds.samples.push_back(row);
        ds.labels.push_back(code);
    }

    if (ds.labels.empty()) throw DataError("dataset '" + name + "' contains no rows");
    if (ds.label_names[1].empty()) {
        throw DataError("dataset '" + name + "' has a single class '" + ds.label_names[0] + "'; two are required");
    }
    if (options.header) {
        for (std::size_t c = 0; c < header_names.size(); ++c) {
            if (c != label_col) ds.feature_names.push_back(header_names[c]);
        }
    }
    return ds;
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file " + path.string());
    return parse_csv(in, options, path.stem().string());
}

Dataset impute_missing(Dataset dataset) {
    if (dataset.missing.empty()) return dataset;

    const std::size_t n = dataset.size();
    const std::size_t d = dataset.feature_count();
    std::vector<char> hole(n * d, 0);
    for (const auto& cell : dataset.missing) hole[cell.row * d + cell.column] = 1;

    std::vector<double> sum(d, 0.0);
    std::vector<std::size_t> count(d, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const PointView p = dataset.samples[r];
        for (std::size_t c = 0; c < d; ++c) {
            if (hole[r * d + c]) continue;
            sum[c] += p[c];
            ++count[c];
        }
    }
    for (const auto& cell : dataset.missing) {
        if (count[cell.column] == 0) {
            const std::string col = cell.column < dataset.feature_names.size()
                                        ? "'" + dataset.feature_names[cell.column] + "'"
                                        : std::to_string(cell.column);
            throw DataError("feature column " + col + " has no observed values to impute from");
        }
        dataset.samples.row(cell.row)[cell.column] = sum[cell.column] / static_cast<double>(count[cell.column]);
    }
    dataset.imputed_cells += dataset.missing.size();
    dataset.missing.clear();
    return dataset;
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] == fold) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] != fold) out.push_back(i);
    }
    return out;
}

FoldPlan make_folds(std::span<const int> labels, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw ParameterError("fold count must be at least 2, got " + std::to_string(k));
    if (k > labels.size()) {
        throw ParameterError("fold count " + std::to_string(k) + " exceeds sample count " +
                             std::to_string(labels.size()));
    }

    FoldPlan plan;
    plan.fold_count = k;
    plan.seed = seed;
    plan.assignments.assign(labels.size(), 0);

    std::mt19937_64 rng(seed);
    std::size_t dealt = 0;
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == cls) members.push_back(i);
        }
        for (std::size_t i = members.size(); i > 1; --i) {
            std::swap(members[i - 1], members[bounded(rng, i)]);
        }
        for (std::size_t idx : members) plan.assignments[idx] = dealt++ % k;
    }
    if (dealt != labels.size()) throw ParameterError("fold labels must be 0 or 1");
    return plan;
}

FoldPlan make_folds(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
    return make_folds(std::span<const int>(dataset.labels), k, seed);
}

}  // namespace mstcd
