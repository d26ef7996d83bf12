#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinsvm/dataset.hpp"
#include "twinsvm/kernel.hpp"
#include "twinsvm/membership.hpp"
#include "twinsvm/solver.hpp"

namespace twinsvm {

// True-positive and false-positive rates against the +1 class.
struct Confusion {
    double tp_rate = 0.0;
    double fp_rate = 0.0;
};

Confusion confusion(const Eigen::VectorXi& truth, const Eigen::VectorXi& predicted);

// Balanced-accuracy AUC over hard labels: (1 + TPR - FPR) / 2. Symmetric in
// the class designation. Throws UndefinedMetricError when the truth vector
// contains a single class.
double auc(const Eigen::VectorXi& truth, const Eigen::VectorXi& predicted);

// Tie-averaged ranks per row (rank 1 = best score) plus column means.
struct RankTable {
    Eigen::MatrixXd scores;     // N x k input
    Eigen::MatrixXd ranks;      // N x k, each row sums to k(k+1)/2
    Eigen::VectorXd avg_ranks;  // length k
};

RankTable rank_table(const Eigen::MatrixXd& scores);

struct FriedmanResult {
    double chi2 = 0.0;  // rank-based chi-squared statistic
    double ff = 0.0;    // F-distributed refinement; +inf when the denominator vanishes
    int dof1 = 0;       // k - 1
    int dof2 = 0;       // (k - 1)(N - 1)
};

// Computed from the exact (unrounded) average ranks:
//   chi2 = 12 N / (k (k+1)) * (sum_j R_j^2 - k (k+1)^2 / 4)
//   ff   = (N - 1) chi2 / (N (k - 1) - chi2)
FriedmanResult friedman(const RankTable& rt);

// Critical difference q_alpha * sqrt(k (k+1) / (6 N)): the minimum average
// rank gap deemed significant by the post-hoc test.
double nemenyi_cd(int k, int n_datasets, double q_alpha);

// Bundled two-tailed studentized-range constants (divided by sqrt 2) for
// k in {2..10} at alpha in {0.05, 0.10}.
double nemenyi_q(int k, double alpha);

// Classifier identifiers understood by the training and reporting layers.
enum class ModelId { lstsvm, elstsvm, relstsvm, if_relstsvm, f_relstsvm };

std::string to_string(ModelId id);
std::optional<ModelId> model_from_string(const std::string& name);
bool is_energy_model(ModelId id);
bool is_weighted_model(ModelId id);

// Knobs of the two fuzzy weight schemes. ifma_gamma empty = use the median
// pairwise feature-space distance of the training split.
struct MembershipSettings {
    double ifma_delta = 1e-4;
    std::optional<double> ifma_gamma;
    double pfma_delta = 1e-4;
    PfmaNorm pfma_norm = PfmaNorm::global;
};

// Trains the identified model on d: splits classes, derives fuzzy weights
// when the model calls for them, and dispatches to the matching fit.
TwinModel train_model(const Dataset& d, ModelId id, const SolverParams& params,
                      const KernelSpec& spec, const MembershipSettings& ms);

// Search space of the cross-validated tuner. c12 drives c1 = c2 and c34
// drives c3 = c4 (the standard tying that keeps the search quadratic);
// sigma applies to the gaussian kernel only.
struct ParamGrids {
    std::vector<double> c12;
    std::vector<double> c34;
    std::vector<double> e1;
    std::vector<double> e2;
    std::vector<double> sigma;

    // c12/c34 = {10^-5 .. 10^5}, e1/e2 = {0.6, 0.7, 0.8, 0.9, 1},
    // sigma = {2^-5 .. 2^5}.
    static ParamGrids defaults();
};

struct GridSearchResult {
    SolverParams params;
    KernelSpec kernel;
    double mean_auc = 0.0;  // mean validation AUC of the winning combination
};

// Stratified k-fold grid search maximizing mean validation AUC. Combinations
// are scored independently (parallel when OpenMP is enabled) and the winner
// is the first maximum in deterministic iteration order: sigma, then c12,
// then c34, then e1, then e2, each ascending as given. Only the dimensions a
// model actually uses are iterated. Training errors propagate.
GridSearchResult grid_search_cv(const Dataset& d, ModelId model,
                                const ParamGrids& grids, KernelFamily family,
                                int folds, std::uint64_t seed,
                                const MembershipSettings& ms);

}  // namespace twinsvm
