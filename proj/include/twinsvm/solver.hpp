#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "twinsvm/kernel.hpp"

namespace twinsvm {

enum class ModelKind { lstsvm, elstsvm, relstsvm, weighted_relstsvm };
enum class DecisionRule { perpendicular, ratio };

// Hyperparameters for the twin-plane solvers. The penalty constants follow
// each formulation's own numbering:
//   lstsvm / elstsvm:      c1, c2 weight the two slack terms (c3, c4 unused)
//   relstsvm:              c1, c2 slack penalties; c3, c4 Tikhonov terms
//   weighted_relstsvm:     c1 slack / c2 Tikhonov for plane 1,
//                          c3 slack / c4 Tikhonov for plane 2
// e1 and e2 are the energy targets of the opposite-class constraints
// (elstsvm onward; lstsvm behaves as e1 = e2 = 1).
struct SolverParams {
    ModelKind model = ModelKind::lstsvm;
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 1.0;
    double c4 = 1.0;
    double e1 = 1.0;
    double e2 = 1.0;
};

// Slack penalties and energy targets for a plain energy-model fit, used when
// another component needs the planes themselves (e.g. projection-based
// memberships) rather than a classifier.
struct ElsParams {
    double c1 = 1.0;
    double c2 = 1.0;
    double e1 = 1.0;
    double e2 = 1.0;
};

// A trained pair of non-parallel planes f_i(x) = w_i.phi(x) + b_i. For the
// linear kernel the coefficient vectors live in input space (length n); for
// the gaussian kernel they act on kernel evaluations against `basis`, the
// stacked training matrix (class +1 rows first), and have length rows(basis).
struct TwinModel {
    Eigen::VectorXd w1;
    double b1 = 0.0;
    Eigen::VectorXd w2;
    double b2 = 0.0;
    KernelSpec spec;
    Eigen::MatrixXd basis;  // empty for linear models
    DecisionRule rule = DecisionRule::perpendicular;

    // Plane values f_1 and f_2 for each row of x.
    Eigen::MatrixXd plane_values(const Eigen::MatrixXd& x) const;
};

// a: class +1 samples (p x n), b: class -1 samples (q x n).
TwinModel fit_lstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     const SolverParams& params, const KernelSpec& spec);
TwinModel fit_elstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const SolverParams& params, const KernelSpec& spec);
TwinModel fit_relstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       const SolverParams& params, const KernelSpec& spec);

// Fuzzy-weighted variant: s1/s2 scale the slack of the class +1 / class -1
// samples. Backs both membership schemes; only the weight source differs.
TwinModel fit_weighted(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                       const SolverParams& params, const KernelSpec& spec);

// As fit_elstsvm but with `extra_ridge * I` added to both system matrices;
// used by the projection-based membership scheme to keep its inner planes
// well-conditioned.
TwinModel fit_elstsvm_ridged(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                             const ElsParams& params, const KernelSpec& spec,
                             double extra_ridge);

// Labels for each row of x. The perpendicular rule picks the plane with the
// smaller |f_i(x)| / |w_i|; the ratio rule returns +1 iff |f1| <= |f2|.
// Ties resolve to +1 under both rules.
Eigen::VectorXi predict(const TwinModel& model, const Eigen::MatrixXd& x);

// Self-describing text serialization; round-trips every finite double
// exactly (17 significant digits).
void save_model(const TwinModel& model, std::ostream& out);
void save_model(const TwinModel& model, const std::string& path);
TwinModel load_model(std::istream& in);
TwinModel load_model(const std::string& path);

}  // namespace twinsvm
