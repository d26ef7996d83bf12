#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace twinsvm {

// Binary classification dataset: one sample per row, labels in {+1, -1}.
struct Dataset {
    std::string name;
    Eigen::MatrixXd x;  // m x n feature matrix
    Eigen::VectorXi y;  // m labels, each +1 or -1

    Eigen::Index rows() const { return x.rows(); }
    Eigen::Index cols() const { return x.cols(); }

    // Feature rows belonging to the given class, in dataset order.
    Eigen::MatrixXd class_matrix(int label) const;
    std::vector<Eigen::Index> class_indices(int label) const;
};

struct ClassStats {
    Eigen::Index p = 0;            // +1 samples
    Eigen::Index q = 0;            // -1 samples
    double ir = 1.0;               // max(p, q) / min(p, q)
    int majority_label = 1;        // +1 on ties
};

// Fold membership per sample; folds are numbered [0, folds).
struct FoldAssignment {
    int folds = 0;
    std::vector<int> fold_index;

    std::vector<Eigen::Index> test_indices(int fold) const;
    std::vector<Eigen::Index> train_indices(int fold) const;
};

// KEEL-style '.dat' loader: '@' header lines, a mandatory '@data' marker,
// comma-separated numeric rows, and a two-token label column (the last
// column unless '@inputs'/'@outputs' designate otherwise). The label token
// with the majority count maps to +1 (count ties: the token seen first maps
// to +1); exception: if the two tokens are literally the numbers +1 and -1
// they are kept as-is.
Dataset load_keel(const std::string& path);

// Headerless CSV: n feature columns then a label column, same label-token
// mapping as load_keel. Reads back everything save_csv writes.
Dataset load_csv(const std::string& path, const std::string& name = "");
void save_csv(const Dataset& d, const std::string& path);

ClassStats class_stats(const Dataset& d);

// Synthetic "crossplane" data: two noisy intersecting lines over x in [0,1].
// The positive class lies on y = -0.6 x + 1, the negative class on
// y = 0.7 x + 0.1; the y coordinate gets uniform noise in [-noise, +noise].
Dataset generate_crossplane(Eigen::Index n_pos, Eigen::Index n_neg,
                            double noise, std::uint64_t seed);

// Per-class shuffled round-robin assignment; deterministic for a fixed seed.
FoldAssignment stratified_kfold(const Dataset& d, int folds,
                                std::uint64_t seed);

// Rows of d selected by idx, order preserved.
Dataset subset(const Dataset& d, const std::vector<Eigen::Index>& idx);

// Columnwise min-max scaling to [0, 1]; constant columns collapse to 0.
Dataset minmax_scale(const Dataset& d);

}  // namespace twinsvm
