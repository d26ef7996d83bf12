#pragma once

#include <Eigen/Dense>
#include <vector>

namespace twinsvm {

// A symmetric positive-definite linear system M x = rhs.
struct SpdSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};

// Cholesky solve with a residual guarantee: the returned x satisfies
// |M x - rhs| <= 1e-8 |rhs| (iterative refinement is applied if the first
// solve falls short). Throws NumericalError naming the first non-positive
// leading minor when M is not numerically positive definite, ContractError
// when M is not symmetric to 1e-10 relative.
Eigen::VectorXd spd_solve(const SpdSystem& sys);

// Solve (coeff * tall^T tall + ridge * I_d) x = rhs, where tall is t x d.
// When t is small relative to d the inverse is rewritten through the
// low-rank identity
//   (ridge I + coeff U^T U)^-1 = (1/ridge) [I - U^T ((ridge/coeff) I + U U^T)^-1 U]
// so only a t x t system is factorized; otherwise the d x d system is
// assembled and solved directly. Both paths agree to rounding error.
Eigen::VectorXd smw_solve(double coeff, const Eigen::MatrixXd& tall,
                          double ridge, const Eigen::VectorXd& rhs);

// Which of the two data terms is folded into the reduced inverse first when
// solving the two-term systems below; the other term enters through the
// low-rank correction.
enum class FoldOrder { f_first, g_first };

// Solve (alpha F^T F + beta G^T G + ridge I) x = rhs for alpha, beta,
// ridge > 0. When both F and G have fewer rows than 0.8x the matrix
// dimension, the solve runs entirely through reduced systems of sizes
// rows(F) and rows(G) in the requested fold order; otherwise the full
// matrix is assembled and handed to spd_solve.
Eigen::VectorXd solve_two_term(const Eigen::MatrixXd& f, double alpha,
                               const Eigen::MatrixXd& g, double beta,
                               double ridge, const Eigen::VectorXd& rhs,
                               FoldOrder order);

// Sizes of every dense Cholesky factorization performed by the calling
// thread since the last reset, in execution order. Lets tests pin down
// which reduced systems a solve actually factorized.
const std::vector<Eigen::Index>& factorization_log();
void clear_factorization_log();

}  // namespace twinsvm
