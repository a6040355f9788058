#include "mstcd/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>

#include "mstcd/error.hpp"

namespace mstcd {

namespace {

const std::string kUci = "https://archive.ics.uci.edu/ml/machine-learning-databases/";

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

CsvOptions csv(char delimiter, bool header, const std::string& label, bool whitespace = false) {
    CsvOptions o;
    o.delimiter = delimiter;
    o.header = header;
    o.whitespace = whitespace;
    o.label = LabelColumn::parse(label);
    return o;
}

std::vector<PublishedAccuracy> group(const std::string& name, std::vector<std::string> methods,
                                     std::vector<double> values) {
    std::vector<PublishedAccuracy> out;
    for (std::size_t i = 0; i < methods.size() && i < values.size(); ++i) {
        if (values[i] < 0.0) continue;  // not reported
        out.push_back(PublishedAccuracy{name, methods[i], values[i]});
    }
    return out;
}

void append(std::vector<PublishedAccuracy>& into, std::vector<PublishedAccuracy> more) {
    into.insert(into.end(), more.begin(), more.end());
}

const std::vector<std::string> kInterpretable{"Bart", "C5.0", "CART", "Lasso", "LR",
                                              "NB",   "RF",   "SBFC", "SVM",   "TAN"};
const std::vector<std::string> kEnsemble{"AdaBoostM1", "Bagging", "Dagging", "LogitBoost", "MODLEM",
                                         "Decorate",   "Grading", "MultiBoostAB", "StackingC"};
const std::vector<std::string> kClassical{"DecisionTree", "k-NN", "NB", "RF", "SVM"};
const std::vector<std::string> kOurs{"mst-cd", "mst-cd-gp", "n-ary"};

std::vector<DatasetEntry> make_builtins() {
    std::vector<DatasetEntry> v;

    DatasetEntry arcene;
    arcene.name = "arcene";
    arcene.file = "arcene.data";
    arcene.csv = csv(' ', false, "last", true);
    arcene.alpha = 0.25;
    arcene.k = 4;
    arcene.features = 10000;
    arcene.instances = 100;
    arcene.class_sizes = {44, 56};
    arcene.sources = {kUci + "arcene/ARCENE/arcene_train.data", kUci + "arcene/ARCENE/arcene_train.labels"};
    arcene.reference = group("reference", kOurs, {79.6, 77.7, 80.3});
    append(arcene.baselines, group("interpretable", kInterpretable, {71.6, 66, 63, 65.6, 52, 69, 71.8, 72.2, 72, -1}));
    append(arcene.baselines, group("ensemble", kEnsemble, {79.5, 82.5, 74.5, 85.5, 86.0, -1, 56.0, 80.0, 56.0}));
    append(arcene.baselines, group("classical", kClassical, {67.2, 66.7, 69.7, 71.4, 71.4}));
    v.push_back(arcene);

    DatasetEntry gisette;
    gisette.name = "gisette";
    gisette.file = "gisette.data";
    gisette.csv = csv(' ', false, "last", true);
    gisette.alpha = 0.2;
    gisette.k = 4;
    gisette.features = 5000;
    gisette.instances = 6000;
    gisette.class_sizes = {3000, 3000};
    gisette.sources = {kUci + "gisette/GISETTE/gisette_train.data", kUci + "gisette/GISETTE/gisette_train.labels"};
    gisette.reference = group("reference", {"mst-cd"}, {96.8});
    append(gisette.baselines,
           group("interpretable", kInterpretable, {97.7, 94.8, 90.8, 97.2, 88.1, 90.3, 97, 95.2, 96.9, -1}));
    append(gisette.baselines, group("ensemble", kEnsemble, {88.9, 75.0, 82.2, 89.4, -1, 82.2, 48.1, 82.7, 48.1}));
    v.push_back(gisette);

    DatasetEntry madelon;
    madelon.name = "madelon";
    madelon.file = "madelon.data";
    madelon.csv = csv(' ', false, "last", true);
    madelon.alpha = 0.25;
    madelon.k = 12;
    madelon.features = 500;
    madelon.instances = 2000;
    madelon.class_sizes = {1000, 1000};
    madelon.sources = {kUci + "madelon/MADELON/madelon_train.data", kUci + "madelon/MADELON/madelon_train.labels"};
    madelon.reference = group("reference", kOurs, {75, 75.2, 75.3});
    append(madelon.baselines,
           group("interpretable", kInterpretable, {76, 75.8, 78.2, 60.7, 60, 59.8, 67.1, 63.4, 62, 54.2}));
    append(madelon.baselines, group("ensemble", kEnsemble, {63.4, 75.0, 57.2, 63.0, 52.5, 73.3, 50.1, 61.7, 50.1}));
    append(madelon.baselines, group("classical", kClassical, {82.7, 74.8, 79.3, 77.9, 78.4}));
    v.push_back(madelon);

    DatasetEntry hill;
    hill.name = "hill";
    hill.file = "hill.data";
    hill.csv = csv(',', true, "last");
    hill.alpha = 0.9;
    hill.k = 2;
    hill.features = 101;
    hill.instances = 606;
    hill.class_sizes = {305, 301};
    hill.sources = {kUci + "hill-valley/Hill_Valley_with_noise_Training.data"};
    hill.reference = group("reference", kOurs, {58.1, 57.9, 61.1});
    append(hill.baselines, group("ensemble", kEnsemble, {50.4, 50.2, 50.4, 50.4, -1, -1, 50.4, 50.4, 50.4}));
    v.push_back(hill);

    DatasetEntry sonar;
    sonar.name = "sonar";
    sonar.file = "sonar.all-data";
    sonar.csv = csv(',', false, "last");
    sonar.alpha = 0.1;
    sonar.k = 2;
    sonar.features = 60;
    sonar.instances = 208;
    sonar.class_sizes = {97, 111};
    sonar.sources = {kUci + "undocumented/connectionist-bench/sonar/sonar.all-data"};
    sonar.reference = group("reference", {"mst-cd", "mst-cd (per-fold table)", "mst-cd-gp", "n-ary",
                                          "n-ary (gamma table)"},
                            {85.4, 85.5, 85.2, 88.0, 87.3});
    append(sonar.baselines, group("ensemble", kEnsemble, {71.6, 76.9, 69.7, 79.3, 70.6, 84.1, 53.3, 74.5, 53.3}));
    append(sonar.baselines, group("classical", kClassical, {79.5, 80.4, 77.6, 81.4, 82.3}));
    v.push_back(sonar);

    DatasetEntry australian;
    australian.name = "australian";
    australian.file = "australian.dat";
    australian.csv = csv(' ', false, "last", true);
    australian.alpha = 0.05;
    australian.k = 6;
    australian.features = 14;
    australian.instances = 690;
    australian.class_sizes = {307, 383};
    australian.sources = {kUci + "statlog/australian/australian.dat"};
    australian.reference = group("reference", kOurs, {69.0, 70.6, 70.3});
    append(australian.baselines,
           group("interpretable", kInterpretable, {86.9, 86.7, 84.2, 85.6, 86.8, 85.7, 87.8, 86.9, 86, 86.8}));
    v.push_back(australian);

    DatasetEntry mofn;
    mofn.name = "mofn";
    mofn.file = "mofn.tsv";
    mofn.csv = csv('\t', true, "target");
    mofn.alpha = 0.05;
    mofn.k = 2;
    mofn.features = 10;
    mofn.instances = 1324;
    mofn.class_sizes = {292, 1032};
    mofn.sources = {"https://github.com/EpistasisLab/pmlb/raw/master/datasets/mofn_3_7_10/mofn_3_7_10.tsv.gz"};
    mofn.reference = group("reference", kOurs, {100, 100, 100});
    append(mofn.baselines,
           group("interpretable", kInterpretable, {100, 84.8, 83.9, 100, 100, 86.4, 92.4, 86.2, 94.6, 92.1}));
    v.push_back(mofn);

    DatasetEntry pima;
    pima.name = "pima";
    pima.file = "pima.csv";
    pima.csv = csv(',', false, "last");
    pima.alpha = 0.05;
    pima.k = 6;
    pima.features = 8;
    pima.instances = 688;
    // Listed as 305-301, which does not sum to the listed instance count.
    pima.class_sizes = {305, 301};
    pima.sources = {"https://raw.githubusercontent.com/jbrownlee/Datasets/master/pima-indians-diabetes.data.csv"};
    pima.reference = group("reference", kOurs, {70.1, 71.7, 74.1});
    append(pima.baselines,
           group("interpretable", kInterpretable, {78.2, 76.8, 75.7, 78, 78.3, 78, 77.8, 78.9, 78.1, 78.9}));
    v.push_back(pima);

    return v;
}

bool parse_bool(const std::string& v) {
    const std::string s = lower(v);
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw DataError("manifest: expected true/false, got '" + v + "'");
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<DatasetEntry>& builtin_datasets() {
    static const std::vector<DatasetEntry> entries = make_builtins();
    return entries;
}

std::optional<DatasetEntry> find_builtin(std::string_view name) {
    std::string key = lower(name);
    if (key == "hills" || key == "hill-valley") key = "hill";
    for (const auto& e : builtin_datasets()) {
        if (e.name == key) return e;
    }
    return std::nullopt;
}

std::vector<DatasetEntry> parse_manifest(std::istream& in) {
    std::vector<DatasetEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw DataError("manifest line " + std::to_string(line_no) + ": unterminated section");
            const std::string name = strip(t.substr(1, t.size() - 2));
            DatasetEntry e = find_builtin(name).value_or(DatasetEntry{});
            e.name = lower(name);
            out.push_back(std::move(e));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || out.empty()) {
            throw DataError("manifest line " + std::to_string(line_no) + ": expected 'key = value' inside a section");
        }
        const std::string key = lower(strip(t.substr(0, eq)));
        const std::string value = strip(t.substr(eq + 1));
        auto& e = out.back();
        try {
            if (key == "path" || key == "file") e.file = value;
            else if (key == "label") e.csv.label = LabelColumn::parse(value);
            else if (key == "missing") e.csv.missing_token = value;
            else if (key == "header") e.csv.header = parse_bool(value);
            else if (key == "alpha") e.alpha = std::stod(value);
            else if (key == "k") e.k = std::stoul(value);
            else if (key == "delimiter") {
                const std::string d = lower(value);
                e.csv.whitespace = d == "whitespace" || d == "space";
                if (d == "tab") e.csv.delimiter = '\t';
                else if (!e.csv.whitespace && value.size() == 1) e.csv.delimiter = value[0];
                else if (!e.csv.whitespace) throw DataError("manifest: bad delimiter '" + value + "'");
            } else {
                throw DataError("manifest line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw DataError("manifest line " + std::to_string(line_no) + ": bad value '" + value + "' for " + key);
        }
    }
    return out;
}

std::vector<std::string> check_against_manifest(const Dataset& dataset, const DatasetEntry& entry) {
    std::vector<std::string> notes;
    if (entry.features != 0 && dataset.feature_count() != entry.features) {
        notes.push_back("feature count " + std::to_string(dataset.feature_count()) + " differs from listed " +
                        std::to_string(entry.features));
    }
    if (entry.instances != 0 && dataset.size() != entry.instances) {
        notes.push_back("instance count " + std::to_string(dataset.size()) + " differs from listed " +
                        std::to_string(entry.instances));
    }
    if (entry.class_sizes[0] + entry.class_sizes[1] != 0) {
        auto got = dataset.class_counts();
        auto listed = entry.class_sizes;
        std::sort(got.begin(), got.end());
        std::sort(listed.begin(), listed.end());
        if (got != listed) {
            notes.push_back("class sizes " + std::to_string(dataset.class_counts()[0]) + "-" +
                            std::to_string(dataset.class_counts()[1]) + " differ from listed " +
                            std::to_string(entry.class_sizes[0]) + "-" + std::to_string(entry.class_sizes[1]));
        }
        if (entry.class_sizes[0] + entry.class_sizes[1] != entry.instances) {
            notes.push_back("listed class sizes do not sum to the listed instance count");
        }
    }
    return notes;
}

}  // namespace mstcd
