#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "twinsvm/dataset.hpp"
#include "twinsvm/kernel.hpp"
#include "twinsvm/solver.hpp"

namespace twinsvm {

// Intuitionistic pair per sample: membership mu (closeness to the own-class
// center in kernel feature space) and non-membership nu (share of
// opposite-class points in the gamma-neighborhood). Always satisfies
// 0 < mu <= 1, 0 <= nu <= 1, mu + nu <= 1.
struct IfNumbers {
    Eigen::VectorXd mu;
    Eigen::VectorXd nu;
};

enum class WeightScheme { ifma, pfma };

// Final per-sample slack weights, split by class in dataset order.
struct FuzzyWeights {
    Eigen::VectorXd s1;  // class +1 samples
    Eigen::VectorXd s2;  // class -1 samples
    WeightScheme scheme = WeightScheme::ifma;
};

// Knobs of the intuitionistic scheme: delta cushions the class radius
// in the membership denominator, gamma is the neighborhood radius.
struct IfmaParams {
    double delta = 1e-4;
    double gamma = 1.0;
};

// mu_i = 1 - |phi(x_i) - center(class of i)| / (radius + delta), with
// distances evaluated through kernel values only, so the same code serves
// the linear and gaussian feature spaces.
Eigen::VectorXd ifma_membership(const Dataset& d, const KernelSpec& spec,
                                double delta);

// nu_i = (1 - mu_i) * rho_i where rho_i is the fraction of points within
// distance gamma of x_i (the point itself included, so the denominator is
// never zero) that belong to the opposite class.
Eigen::VectorXd ifma_nonmembership(const Dataset& d, const KernelSpec& spec,
                                   double gamma, const Eigen::VectorXd& mu);

// Fuses (mu, nu) into one score: mu when the neighborhood is clean (nu = 0),
// 0 when mu <= nu (likely noise), else (1 - nu) / (2 - mu - nu).
Eigen::VectorXd ifma_score(const IfNumbers& numbers);

// Default neighborhood radius: median pairwise distance in kernel feature
// space over all sample pairs.
double median_pairwise_distance(const Dataset& d, const KernelSpec& spec);

// Applies the imbalance multiplier: majority-class samples keep their score,
// minority-class samples get score * IR; then splits by class.
FuzzyWeights weights_from_scores(const Eigen::VectorXd& scores, const Dataset& d,
                                 WeightScheme scheme);

// Whether the projection scores normalize distances over all samples or
// within each class separately.
enum class PfmaNorm { global, per_class };

// exp(-(d - d_min)/(d_max - d_min)) for a distance vector; all outputs in
// [exp(-1), 1], and 1 everywhere when the distances carry no spread.
Eigen::VectorXd pfma_normalize(const Eigen::VectorXd& distances);

// Projection-based scores: fit a ridged energy-model plane pair on d, take
// each sample's perpendicular-style distance |f(x)| / |w| to its own-class
// plane, and map distances through pfma_normalize (globally or per class).
Eigen::VectorXd pfma_scores(const Dataset& d, const KernelSpec& spec,
                            const ElsParams& inner, double delta,
                            PfmaNorm norm = PfmaNorm::global);

// Debug dump: one CSV row per sample with label, mu, nu, score (ifma) or
// label, distance, score (pfma-style vectors).
void write_membership_csv(std::ostream& out, const Dataset& d,
                          const IfNumbers& numbers, const Eigen::VectorXd& scores);

}  // namespace twinsvm
