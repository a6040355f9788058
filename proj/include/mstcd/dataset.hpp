#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mstcd/geometry.hpp"

namespace mstcd {

// Which column of a delimited file carries the class label.
struct LabelColumn {
    enum class Mode { Last, Index, Name };
    Mode mode = Mode::Last;
    std::size_t index = 0;  // 0-based, Mode::Index
    std::string name;       // header name, Mode::Name

    // "last", a 0-based integer, or a header name.
    static LabelColumn parse(const std::string& text);
    std::string to_string() const;
};

struct CsvOptions {
    char delimiter = ',';
    bool whitespace = false;  // split on runs of blanks/tabs, ignoring `delimiter`
    bool header = false;
    LabelColumn label;
    std::string missing_token = "?";
};

struct CellRef {
    std::size_t row = 0;
    std::size_t column = 0;
};

// Two-class dataset. Labels are 0/1 in first-seen order; label_names keeps
// the original text of each.
struct Dataset {
    std::string name;
    PointSet samples;
    std::vector<int> labels;
    std::array<std::string, 2> label_names;
    std::vector<std::string> feature_names;
    // Cells still awaiting imputation (stored as NaN in `samples`).
    std::vector<CellRef> missing;
    // Cells filled by impute_missing so far.
    std::size_t imputed_cells = 0;

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t feature_count() const noexcept { return samples.dim(); }
    std::array<std::size_t, 2> class_counts() const;
};

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options);
Dataset parse_csv(std::istream& in, const CsvOptions& options, const std::string& name);

// Replaces each missing cell by the mean of the non-missing values of its
// column. Throws DataError naming the column if a column has no values.
Dataset impute_missing(Dataset dataset);

struct FoldPlan {
    std::size_t fold_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> assignments;  // fold index per sample

    std::vector<std::size_t> test_indices(std::size_t fold) const;
    std::vector<std::size_t> train_indices(std::size_t fold) const;
};

// Stratified: each class is shuffled with a seeded generator, then all
// classes are dealt round-robin onto folds with one running counter.
FoldPlan make_folds(std::span<const int> labels, std::size_t k, std::uint64_t seed);
FoldPlan make_folds(const Dataset& dataset, std::size_t k, std::uint64_t seed);

}  // namespace mstcd
