#include "twinsvm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "twinsvm/errors.hpp"
#include "twinsvm/rng.hpp"

namespace twinsvm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool parse_double(const std::string& token, double& value) {
    const std::string t = trim(token);
    if (t.empty()) return false;
    std::size_t used = 0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == t.size() && std::isfinite(value);
}

// Shared tail of both loaders: rows of string cells with one label column.
Dataset build_dataset(const std::string& name,
                      const std::vector<std::vector<std::string>>& rows,
                      std::size_t label_col) {
    std::vector<std::string> tokens;           // distinct labels, first-seen order
    std::vector<Eigen::Index> counts;
    std::vector<std::size_t> token_of_row;
    for (const auto& row : rows) {
        const std::string& t = row[label_col];
        auto it = std::find(tokens.begin(), tokens.end(), t);
        if (it == tokens.end()) {
            tokens.push_back(t);
            counts.push_back(0);
            it = tokens.end() - 1;
        }
        const std::size_t idx = static_cast<std::size_t>(it - tokens.begin());
        ++counts[idx];
        token_of_row.push_back(idx);
    }
    if (tokens.size() != 2) {
        throw UnsupportedDatasetError(name + ": expected exactly 2 label tokens, found " +
                                      std::to_string(tokens.size()));
    }

    // Majority token -> +1 (ties: first-seen token -> +1), unless the tokens
    // are the literal numbers +1/-1, which are kept so that files written by
    // save_csv load back unchanged.
    int label_of_token[2] = {+1, -1};
    double v0 = 0.0;
    double v1 = 0.0;
    const bool numeric_pm1 = parse_double(tokens[0], v0) && parse_double(tokens[1], v1) &&
                             ((v0 == 1.0 && v1 == -1.0) || (v0 == -1.0 && v1 == 1.0));
    if (numeric_pm1) {
        label_of_token[0] = v0 > 0 ? +1 : -1;
        label_of_token[1] = -label_of_token[0];
    } else if (counts[1] > counts[0]) {
        label_of_token[0] = -1;
        label_of_token[1] = +1;
    }

    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index n = static_cast<Eigen::Index>(rows.front().size()) - 1;
    Dataset d;
    d.name = name;
    d.x.resize(m, n);
    d.y.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index col = 0;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j == label_col) continue;
            double v = 0.0;
            if (!parse_double(rows[i][j], v)) {
                throw ParseError(name + ": non-numeric cell at data row " +
                                 std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                 " ('" + rows[i][j] + "')");
            }
            d.x(i, col++) = v;
        }
        d.y[i] = label_of_token[token_of_row[i]];
    }
    return d;
}

}  // namespace

Eigen::MatrixXd Dataset::class_matrix(int label) const {
    const auto idx = class_indices(label);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), x.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.row(idx[i]);
    return out;
}

std::vector<Eigen::Index> Dataset::class_indices(int label) const {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (y[i] == label) idx.push_back(i);
    return idx;
}

std::vector<Eigen::Index> FoldAssignment::test_indices(int fold) const {
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < fold_index.size(); ++i)
        if (fold_index[i] == fold) idx.push_back(static_cast<Eigen::Index>(i));
    return idx;
}

std::vector<Eigen::Index> FoldAssignment::train_indices(int fold) const {
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < fold_index.size(); ++i)
        if (fold_index[i] != fold) idx.push_back(static_cast<Eigen::Index>(i));
    return idx;
}

Dataset load_keel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    const std::string name = std::filesystem::path(path).stem().string();

    std::vector<std::string> attribute_names;
    std::vector<std::string> output_names;
    bool in_data = false;
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!in_data) {
            if (t[0] != '@') {
                throw FormatError(path + ": expected '@' header line before @data, got '" + t + "'");
            }
            std::istringstream hs(t);
            std::string tag;
            hs >> tag;
            tag = lower(tag);
            if (tag == "@data") {
                in_data = true;
            } else if (tag == "@attribute") {
                std::string attr;
                hs >> attr;
                // Names are sometimes glued to their domain, e.g. "Class{a,b}".
                const std::size_t brace = attr.find('{');
                if (brace != std::string::npos) attr = attr.substr(0, brace);
                attribute_names.push_back(attr);
            } else if (tag == "@outputs" || tag == "@output") {
                std::string rest;
                std::getline(hs, rest);
                for (const auto& nm : split(rest, ','))
                    if (!nm.empty()) output_names.push_back(nm);
            }
            // @relation / @inputs need no action: the label column is taken
            // from @outputs when present, else it is the last column.
            continue;
        }
        if (!t.empty() && t[0] == '@') continue;  // stray header below @data
        rows.push_back(split(t, ','));
    }
    if (!in_data) throw FormatError(path + ": missing @data marker");
    if (rows.empty()) {
        throw UnsupportedDatasetError(path + ": expected exactly 2 label tokens, found 0");
    }

    const std::size_t width = rows.front().size();
    if (width < 2) throw FormatError(path + ": rows need at least one feature and a label");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw FormatError(path + ": data row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " cells, expected " +
                              std::to_string(width));
        }
    }

    std::size_t label_col = width - 1;
    if (!output_names.empty()) {
        const auto it = std::find(attribute_names.begin(), attribute_names.end(), output_names.front());
        if (it != attribute_names.end()) {
            const std::size_t idx = static_cast<std::size_t>(it - attribute_names.begin());
            if (idx < width) label_col = idx;
        }
    }
    return build_dataset(name, rows, label_col);
}

Dataset load_csv(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    const std::string effective_name =
        name.empty() ? std::filesystem::path(path).stem().string() : name;

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        rows.push_back(split(t, ','));
    }
    if (rows.empty()) throw FormatError(path + ": empty file");
    const std::size_t width = rows.front().size();
    if (width < 2) throw FormatError(path + ": rows need at least one feature and a label");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw FormatError(path + ": data row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " cells, expected " +
                              std::to_string(width));
        }
    }
    return build_dataset(effective_name, rows, width - 1);
}

void save_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out.precision(17);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) out << d.x(i, j) << ',';
        out << d.y[i] << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

ClassStats class_stats(const Dataset& d) {
    ClassStats s;
    for (Eigen::Index i = 0; i < d.y.size(); ++i) {
        if (d.y[i] == 1) ++s.p;
        else ++s.q;
    }
    if (s.p == 0 || s.q == 0) {
        throw DegenerateDatasetError(d.name + ": a class is empty (p=" + std::to_string(s.p) +
                                     ", q=" + std::to_string(s.q) + ")");
    }
    const double big = static_cast<double>(std::max(s.p, s.q));
    const double small = static_cast<double>(std::min(s.p, s.q));
    s.ir = big / small;
    s.majority_label = s.q > s.p ? -1 : +1;  // ties go to +1
    return s;
}

Dataset generate_crossplane(Eigen::Index n_pos, Eigen::Index n_neg,
                            double noise, std::uint64_t seed) {
    if (n_pos < 1 || n_neg < 1) throw ContractError("generate_crossplane: need n_pos, n_neg >= 1");
    if (noise < 0) throw ContractError("generate_crossplane: noise must be >= 0");
    Rng rng(seed);
    Dataset d;
    d.name = "crossplane" + std::to_string(n_pos + n_neg);
    d.x.resize(n_pos + n_neg, 2);
    d.y.resize(n_pos + n_neg);
    for (Eigen::Index i = 0; i < n_pos + n_neg; ++i) {
        const bool pos = i < n_pos;
        const double slope = pos ? -0.6 : 0.7;
        const double intercept = pos ? 1.0 : 0.1;
        const double x = rng.uniform();
        const double eps = noise > 0 ? rng.uniform(-noise, noise) : 0.0;
        d.x(i, 0) = x;
        d.x(i, 1) = slope * x + intercept + eps;
        d.y[i] = pos ? +1 : -1;
    }
    return d;
}

FoldAssignment stratified_kfold(const Dataset& d, int folds, std::uint64_t seed) {
    if (folds < 2) throw ContractError("stratified_kfold: need folds >= 2");
    FoldAssignment fa;
    fa.folds = folds;
    fa.fold_index.assign(static_cast<std::size_t>(d.rows()), -1);
    Rng rng(seed);
    for (int label : {+1, -1}) {
        auto idx = d.class_indices(label);
        if (static_cast<int>(idx.size()) < folds) {
            throw StratificationError(d.name + ": class " + std::to_string(label) + " has " +
                                      std::to_string(idx.size()) + " samples, fewer than " +
                                      std::to_string(folds) + " folds");
        }
        rng.shuffle(idx);
        for (std::size_t i = 0; i < idx.size(); ++i)
            fa.fold_index[static_cast<std::size_t>(idx[i])] = static_cast<int>(i % folds);
    }
    return fa;
}

Dataset subset(const Dataset& d, const std::vector<Eigen::Index>& idx) {
    Dataset out;
    out.name = d.name;
    out.x.resize(static_cast<Eigen::Index>(idx.size()), d.cols());
    out.y.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.x.row(static_cast<Eigen::Index>(i)) = d.x.row(idx[i]);
        out.y[static_cast<Eigen::Index>(i)] = d.y[idx[i]];
    }
    return out;
}

Dataset minmax_scale(const Dataset& d) {
    Dataset out = d;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
        const double lo = d.x.col(j).minCoeff();
        const double hi = d.x.col(j).maxCoeff();
        if (hi > lo) {
            out.x.col(j) = (d.x.col(j).array() - lo) / (hi - lo);
        } else {
            out.x.col(j).setZero();
        }
    }
    return out;
}

}  // namespace twinsvm
