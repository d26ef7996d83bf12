#include "twinsvm/kernel.hpp"

#include <cmath>
#include <string>

#include "twinsvm/errors.hpp"

namespace twinsvm {

namespace {

void check_inputs(const Eigen::MatrixXd& x, const Eigen::MatrixXd& centers,
                  const KernelSpec& spec) {
    if (x.cols() != centers.cols()) {
        throw ShapeError("gram: column mismatch (" + std::to_string(x.cols()) +
                         " vs " + std::to_string(centers.cols()) + ")");
    }
    if (spec.family == KernelFamily::gaussian && !(spec.sigma > 0.0)) {
        throw ContractError("gram: gaussian kernel requires sigma > 0");
    }
}

}  // namespace

Eigen::MatrixXd gram(const Eigen::MatrixXd& x, const Eigen::MatrixXd& centers,
                     const KernelSpec& spec) {
    check_inputs(x, centers, spec);
    if (spec.family == KernelFamily::linear) {
        return x * centers.transpose();
    }

    // |x_i - c_j|^2 = |x_i|^2 + |c_j|^2 - 2 x_i.c_j, clamped at 0 so rounding
    // in the expansion can never produce a negative squared distance.
    const Eigen::VectorXd xn = x.rowwise().squaredNorm();
    const Eigen::VectorXd cn = centers.rowwise().squaredNorm();
    Eigen::MatrixXd k = x * centers.transpose();
    const double inv_two_sigma = 1.0 / (2.0 * spec.sigma);
    const Eigen::Index rows = k.rows();
    const Eigen::Index cols = k.cols();
#pragma omp parallel for if (rows * cols > 4096)
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double d2 = std::max(0.0, xn[i] + cn[j] - 2.0 * k(i, j));
            k(i, j) = std::exp(-d2 * inv_two_sigma);
        }
    }
    return k;
}

Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& x,
                            const Eigen::MatrixXd& centers,
                            const KernelSpec& spec) {
    check_inputs(x, centers, spec);
    Eigen::MatrixXd k(x.rows(), centers.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < centers.rows(); ++j) {
            if (spec.family == KernelFamily::linear) {
                double dot = 0.0;
                for (Eigen::Index t = 0; t < x.cols(); ++t) dot += x(i, t) * centers(j, t);
                k(i, j) = dot;
            } else {
                double d2 = 0.0;
                for (Eigen::Index t = 0; t < x.cols(); ++t) {
                    const double diff = x(i, t) - centers(j, t);
                    d2 += diff * diff;
                }
                k(i, j) = std::exp(-d2 / (2.0 * spec.sigma));
            }
        }
    }
    return k;
}

}  // namespace twinsvm
