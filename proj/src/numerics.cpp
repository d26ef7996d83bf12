#include "twinsvm/numerics.hpp"

#include <cmath>
#include <string>

#include "twinsvm/errors.hpp"

namespace twinsvm {

namespace {

thread_local std::vector<Eigen::Index> g_factorization_log;

// Unblocked Cholesky retained only for diagnostics: locates the first
// non-positive pivot, i.e. the order of the smallest non-PD leading minor.
Eigen::Index first_failing_minor(const Eigen::MatrixXd& m) {
    const Eigen::Index d = m.rows();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        double diag = m(j, j);
        for (Eigen::Index k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0) || !std::isfinite(diag)) return j + 1;
        l(j, j) = std::sqrt(diag);
        for (Eigen::Index i = j + 1; i < d; ++i) {
            double v = m(i, j);
            for (Eigen::Index k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    return d;  // should not happen on the failure path
}

Eigen::LLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& m) {
    g_factorization_log.push_back(m.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("matrix of order " + std::to_string(m.rows()) +
                             " is not positive definite (leading minor " +
                             std::to_string(first_failing_minor(m)) + " fails)");
    }
    return llt;
}

// Iterative refinement shared by every solve path. The low-rank routes divide
// by the ridge, so their rounding error is amplified by 1/ridge; a few passes
// against the true operator (`apply_m`, which never assembles the full
// matrix) restore dense-route accuracy while reusing the factorizations
// captured inside `solve_once`. Returns the iterate with the smallest
// residual, stopping once progress stalls or the rounding floor is reached.
template <class Solve, class Apply>
Eigen::VectorXd refine_with(const Solve& solve_once, const Apply& apply_m,
                            const Eigen::VectorXd& rhs) {
    Eigen::VectorXd x = solve_once(rhs);
    Eigen::VectorXd residual = rhs - apply_m(x);
    Eigen::VectorXd best = x;
    double best_norm = residual.norm();
    const double rounding_floor = 1e-15 * rhs.norm();
    for (int pass = 0; pass < 8 && best_norm > rounding_floor; ++pass) {
        x += solve_once(residual);
        residual = rhs - apply_m(x);
        const double r = residual.norm();
        if (r >= best_norm) break;
        best = x;
        const bool stalled = r >= 0.5 * best_norm;
        best_norm = r;
        if (stalled) break;
    }
    return best;
}

}  // namespace

Eigen::VectorXd spd_solve(const SpdSystem& sys) {
    const Eigen::MatrixXd& m = sys.matrix;
    const Eigen::VectorXd& rhs = sys.rhs;
    if (m.rows() != m.cols()) throw ShapeError("spd_solve: matrix not square");
    if (m.rows() != rhs.size()) throw ShapeError("spd_solve: rhs length mismatch");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale) {
        throw ContractError("spd_solve: matrix asymmetric beyond 1e-10 relative");
    }

    const auto llt = factorize(m);
    const Eigen::VectorXd x = refine_with(
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return llt.solve(v); },
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return m * v; }, rhs);
    if ((rhs - m * x).norm() <= 1e-8 * rhs.norm()) return x;
    throw NumericalError("spd_solve: residual bound 1e-8*|rhs| not reached; system too ill-conditioned");
}

Eigen::VectorXd smw_solve(double coeff, const Eigen::MatrixXd& tall,
                          double ridge, const Eigen::VectorXd& rhs) {
    if (!(ridge > 0.0)) throw ContractError("smw_solve: ridge must be > 0");
    if (!(coeff > 0.0)) throw ContractError("smw_solve: coeff must be > 0");
    const Eigen::Index t = tall.rows();
    const Eigen::Index d = tall.cols();
    if (rhs.size() != d) throw ShapeError("smw_solve: rhs length mismatch");

    if (static_cast<double>(t) >= 0.8 * static_cast<double>(d)) {
        SpdSystem sys;
        sys.matrix = coeff * tall.transpose() * tall;
        sys.matrix.diagonal().array() += ridge;
        sys.rhs = rhs;
        return spd_solve(sys);
    }
    Eigen::MatrixXd inner = tall * tall.transpose();
    inner.diagonal().array() += ridge / coeff;
    const auto llt = factorize(inner);
    return refine_with(
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
            return (v - tall.transpose() * llt.solve(tall * v)) / ridge;
        },
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
            return coeff * (tall.transpose() * (tall * v)) + ridge * v;
        },
        rhs);
}

Eigen::VectorXd solve_two_term(const Eigen::MatrixXd& f, double alpha,
                               const Eigen::MatrixXd& g, double beta,
                               double ridge, const Eigen::VectorXd& rhs,
                               FoldOrder order) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ContractError("solve_two_term: coefficients must be > 0");
    if (!(ridge > 0.0)) throw ContractError("solve_two_term: ridge must be > 0");
    const Eigen::Index d = rhs.size();
    if (f.cols() != d || g.cols() != d) throw ShapeError("solve_two_term: column mismatch");

    const double cutoff = 0.8 * static_cast<double>(d);
    if (static_cast<double>(f.rows()) >= cutoff || static_cast<double>(g.rows()) >= cutoff) {
        SpdSystem sys;
        sys.matrix = alpha * f.transpose() * f + beta * g.transpose() * g;
        sys.matrix.diagonal().array() += ridge;
        sys.rhs = rhs;
        return spd_solve(sys);
    }

    // Fold the first term: D = fold_coeff T^T T + ridge I, applied inverse
    //   D^-1 v = (v - T^T ((ridge/fold_coeff) I + T T^T)^-1 T v) / ridge.
    // Then correct for the remaining term b S^T S by the low-rank identity
    //   (D + b S^T S)^-1 = D^-1 - D^-1 S^T ((1/b) I + S D^-1 S^T)^-1 S D^-1.
    const bool fold_f = order == FoldOrder::f_first;
    const Eigen::MatrixXd& t_mat = fold_f ? f : g;
    const Eigen::MatrixXd& s_mat = fold_f ? g : f;
    const double t_coeff = fold_f ? alpha : beta;
    const double s_coeff = fold_f ? beta : alpha;

    Eigen::MatrixXd inner_t = t_mat * t_mat.transpose();
    inner_t.diagonal().array() += ridge / t_coeff;
    const auto llt_t = factorize(inner_t);
    const auto apply_d_inv = [&](const Eigen::MatrixXd& v) -> Eigen::MatrixXd {
        return (v - t_mat.transpose() * llt_t.solve(t_mat * v)) / ridge;
    };

    const Eigen::MatrixXd z = apply_d_inv(s_mat.transpose());  // D^-1 S^T
    Eigen::MatrixXd inner_s = s_mat * z;
    inner_s.diagonal().array() += 1.0 / s_coeff;
    const auto llt_s = factorize(inner_s);
    return refine_with(
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
            const Eigen::VectorXd y = apply_d_inv(v);
            return y - z * llt_s.solve(s_mat * y);
        },
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
            return alpha * (f.transpose() * (f * v)) + beta * (g.transpose() * (g * v)) +
                   ridge * v;
        },
        rhs);
}

const std::vector<Eigen::Index>& factorization_log() { return g_factorization_log; }

void clear_factorization_log() { g_factorization_log.clear(); }

}  // namespace twinsvm
