#include "twinsvm/membership.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "twinsvm/errors.hpp"

namespace twinsvm {

namespace {

// Squared feature-space distances |phi(x_i) - class center|^2 for all i
// against one class's mean, using only kernel values:
//   K(x,x) - (2/l) sum_j K(x, x_j) + (1/l^2) sum_{j,k} K(x_j, x_k).
Eigen::VectorXd center_sq_distances(const Eigen::MatrixXd& k,
                                    const std::vector<Eigen::Index>& members) {
    const Eigen::Index m = k.rows();
    const double l = static_cast<double>(members.size());
    double within = 0.0;
    for (const Eigen::Index j : members)
        for (const Eigen::Index t : members) within += k(j, t);
    const double center_term = within / (l * l);
    Eigen::VectorXd d2(m);
#pragma omp parallel for if (m > 256)
    for (Eigen::Index i = 0; i < m; ++i) {
        double cross = 0.0;
        for (const Eigen::Index j : members) cross += k(i, j);
        d2[i] = std::max(0.0, k(i, i) - 2.0 * cross / l + center_term);
    }
    return d2;
}

void require_both_classes(const Dataset& d) {
    class_stats(d);  // throws DegenerateDatasetError when a class is empty
}

}  // namespace

Eigen::VectorXd ifma_membership(const Dataset& d, const KernelSpec& spec,
                                double delta) {
    if (!(delta > 0.0)) throw ContractError("ifma_membership: delta must be > 0");
    require_both_classes(d);
    const Eigen::MatrixXd k = gram(d.x, d.x, spec);
    Eigen::VectorXd mu(d.rows());
    for (int label : {+1, -1}) {
        const auto members = d.class_indices(label);
        const Eigen::VectorXd d2 = center_sq_distances(k, members);
        double radius = 0.0;
        for (const Eigen::Index i : members) radius = std::max(radius, std::sqrt(d2[i]));
        for (const Eigen::Index i : members) {
            mu[i] = 1.0 - std::sqrt(d2[i]) / (radius + delta);
        }
    }
    return mu;
}

Eigen::VectorXd ifma_nonmembership(const Dataset& d, const KernelSpec& spec,
                                   double gamma, const Eigen::VectorXd& mu) {
    if (!(gamma > 0.0)) throw ContractError("ifma_nonmembership: gamma must be > 0");
    if (mu.size() != d.rows()) throw ShapeError("ifma_nonmembership: mu length mismatch");
    const Eigen::Index m = d.rows();
    const Eigen::MatrixXd k = gram(d.x, d.x, spec);
    const double gamma2 = gamma * gamma;
    Eigen::VectorXd nu(m);
#pragma omp parallel for if (m > 128)
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index inside = 0;
        Eigen::Index hetero = 0;
        for (Eigen::Index j = 0; j < m; ++j) {
            const double d2 = std::max(0.0, k(i, i) + k(j, j) - 2.0 * k(i, j));
            if (d2 <= gamma2) {
                ++inside;
                if (d.y[j] != d.y[i]) ++hetero;
            }
        }
        const double rho = static_cast<double>(hetero) / static_cast<double>(inside);
        nu[i] = (1.0 - mu[i]) * rho;
    }
    return nu;
}

Eigen::VectorXd ifma_score(const IfNumbers& numbers) {
    if (numbers.mu.size() != numbers.nu.size()) throw ShapeError("ifma_score: length mismatch");
    Eigen::VectorXd k(numbers.mu.size());
    for (Eigen::Index i = 0; i < k.size(); ++i) {
        const double mu = numbers.mu[i];
        const double nu = numbers.nu[i];
        if (nu == 0.0) k[i] = mu;
        else if (mu <= nu) k[i] = 0.0;
        else k[i] = (1.0 - nu) / (2.0 - mu - nu);
    }
    return k;
}

double median_pairwise_distance(const Dataset& d, const KernelSpec& spec) {
    const Eigen::Index m = d.rows();
    if (m < 2) throw ContractError("median_pairwise_distance: need at least 2 samples");
    const Eigen::MatrixXd k = gram(d.x, d.x, spec);
    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            dist.push_back(std::sqrt(std::max(0.0, k(i, i) + k(j, j) - 2.0 * k(i, j))));
        }
    }
    const std::size_t mid = dist.size() / 2;
    std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(mid), dist.end());
    return dist[mid];
}

FuzzyWeights weights_from_scores(const Eigen::VectorXd& scores, const Dataset& d,
                                 WeightScheme scheme) {
    if (scores.size() != d.rows()) throw ShapeError("weights_from_scores: length mismatch");
    const ClassStats stats = class_stats(d);
    FuzzyWeights w;
    w.scheme = scheme;
    w.s1.resize(stats.p);
    w.s2.resize(stats.q);
    Eigen::Index i1 = 0;
    Eigen::Index i2 = 0;
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        const double mult = d.y[i] == stats.majority_label ? 1.0 : stats.ir;
        if (d.y[i] == 1) w.s1[i1++] = mult * scores[i];
        else w.s2[i2++] = mult * scores[i];
    }
    return w;
}

Eigen::VectorXd pfma_normalize(const Eigen::VectorXd& distances) {
    const double lo = distances.minCoeff();
    const double hi = distances.maxCoeff();
    if (!(hi > lo)) return Eigen::VectorXd::Ones(distances.size());
    return (-(distances.array() - lo) / (hi - lo)).exp();
}

Eigen::VectorXd pfma_scores(const Dataset& d, const KernelSpec& spec,
                            const ElsParams& inner, double delta, PfmaNorm norm) {
    require_both_classes(d);
    const Eigen::MatrixXd a = d.class_matrix(+1);
    const Eigen::MatrixXd b = d.class_matrix(-1);
    const TwinModel planes = fit_elstsvm_ridged(a, b, inner, spec, delta);

    const Eigen::MatrixXd f = planes.plane_values(d.x);
    const double n1 = planes.w1.norm();
    const double n2 = planes.w2.norm();
    Eigen::VectorXd dist(d.rows());
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        dist[i] = d.y[i] == 1 ? std::abs(f(i, 0)) / n1 : std::abs(f(i, 1)) / n2;
    }

    if (norm == PfmaNorm::global) return pfma_normalize(dist);
    Eigen::VectorXd h(d.rows());
    for (int label : {+1, -1}) {
        const auto members = d.class_indices(label);
        Eigen::VectorXd sub(static_cast<Eigen::Index>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i) sub[static_cast<Eigen::Index>(i)] = dist[members[i]];
        const Eigen::VectorXd hsub = pfma_normalize(sub);
        for (std::size_t i = 0; i < members.size(); ++i) h[members[i]] = hsub[static_cast<Eigen::Index>(i)];
    }
    return h;
}

void write_membership_csv(std::ostream& out, const Dataset& d,
                          const IfNumbers& numbers, const Eigen::VectorXd& scores) {
    out << "index,label,mu,nu,score\n";
    out.precision(10);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        out << i << ',' << d.y[i] << ',' << numbers.mu[i] << ',' << numbers.nu[i] << ','
            << scores[i] << '\n';
    }
}

}  // namespace twinsvm
