#pragma once

#include <Eigen/Dense>

namespace twinsvm {

enum class KernelFamily { linear, gaussian };

// Kernel description. The gaussian width enters the exponent as
// K(x, c) = exp(-|x - c|^2 / (2 sigma)); note the denominator is 2*sigma,
// not 2*sigma^2, which is the convention the {2^-5 .. 2^5} width grid was
// tuned against.
struct KernelSpec {
    KernelFamily family = KernelFamily::linear;
    double sigma = 1.0;  // ignored for the linear kernel
};

// Gram block K(X, C): entry (i, j) is the kernel value between row i of x
// and row j of centers. Parallelized over rows when OpenMP is enabled.
Eigen::MatrixXd gram(const Eigen::MatrixXd& x, const Eigen::MatrixXd& centers,
                     const KernelSpec& spec);

// Single-threaded naive evaluation (explicit distance per entry rather than
// the expanded-norm matrix product). Kept as the reference implementation for
// tests and benchmarks of the parallel path.
Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& x,
                            const Eigen::MatrixXd& centers,
                            const KernelSpec& spec);

}  // namespace twinsvm
