#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mstcd/dataset.hpp"

namespace mstcd {

// An accuracy published elsewhere, carried only for side-by-side display.
struct PublishedAccuracy {
    std::string group;
    std::string method;
    double percent = 0.0;
};

// Known benchmark dataset: where its file lives relative to the data
// directory, how to parse it, default alpha/k, and the shape the published
// benchmark tables list for it.
struct DatasetEntry {
    std::string name;
    std::string file;
    CsvOptions csv;
    double alpha = 0.5;
    std::size_t k = 1;
    std::size_t features = 0;
    std::size_t instances = 0;
    std::array<std::size_t, 2> class_sizes{};  // as listed, in no guaranteed label order
    std::vector<std::string> sources;

    std::vector<PublishedAccuracy> reference;  // mst-cd / mst-cd-gp / n-ary
    std::vector<PublishedAccuracy> baselines;  // other methods, external
};

const std::vector<DatasetEntry>& builtin_datasets();

// Case-insensitive; "hills" is accepted for "hill".
std::optional<DatasetEntry> find_builtin(std::string_view name);

// INI-style key-value manifest:
//   [name]
//   path = file.csv
//   label = last | <0-based index> | <header name>
//   missing = ?
//   delimiter = , | tab | whitespace
//   header = true | false
//   alpha = 0.1
//   k = 2
// Keys not given fall back to the builtin entry of the same name, if any.
std::vector<DatasetEntry> parse_manifest(std::istream& in);

// Human-readable notes on where a loaded dataset disagrees with its entry.
std::vector<std::string> check_against_manifest(const Dataset& dataset, const DatasetEntry& entry);

}  // namespace mstcd
