#include "twinsvm/solver.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "twinsvm/errors.hpp"
#include "twinsvm/numerics.hpp"

namespace twinsvm {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0)) throw ContractError(std::string("solver: ") + name + " must be > 0");
}

void check_energy(double v, const char* name) {
    if (!(v > 0.0) || v > 1.0) {
        throw ContractError(std::string("solver: ") + name + " must lie in (0, 1]");
    }
}

Eigen::MatrixXd augmented(const Eigen::MatrixXd& x) {
    Eigen::MatrixXd out(x.rows(), x.cols() + 1);
    out.leftCols(x.cols()) = x;
    out.col(x.cols()).setOnes();
    return out;
}

struct Prepared {
    Eigen::MatrixXd own;    // [A 1] or [K(A, basis) 1], p x d
    Eigen::MatrixXd opp;    // [B 1] or [K(B, basis) 1], q x d
    Eigen::MatrixXd basis;  // empty for linear
};

Prepared prepare(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                 const KernelSpec& spec) {
    if (a.rows() == 0 || b.rows() == 0) {
        throw DegenerateDatasetError("solver: both classes must be non-empty");
    }
    if (a.cols() != b.cols()) throw ShapeError("solver: class matrices differ in column count");
    Prepared prep;
    if (spec.family == KernelFamily::linear) {
        prep.own = augmented(a);
        prep.opp = augmented(b);
    } else {
        prep.basis.resize(a.rows() + b.rows(), a.cols());
        prep.basis << a, b;
        prep.own = augmented(gram(a, prep.basis, spec));
        prep.opp = augmented(gram(b, prep.basis, spec));
    }
    return prep;
}

// One proximal plane: minimize
//   1/2 |prox u|^2 + slack/2 |push u - target|^2 + ridge/2 |u|^2
// whose normal equations are
//   (prox^T prox + slack push^T push + ridge I) u = slack push^T target.
// `ridge < 0` requests the singularity fallback 1e-10 * trace / dim (plus
// extra_ridge), used by the formulations that carry no Tikhonov term of
// their own.
Eigen::VectorXd solve_plane(const Eigen::MatrixXd& prox, const Eigen::MatrixXd& push,
                            double slack, double ridge, double extra_ridge,
                            const Eigen::VectorXd& target, FoldOrder order) {
    const Eigen::Index d = prox.cols();
    double effective = ridge;
    if (ridge < 0.0) {
        const double trace = prox.squaredNorm() + slack * push.squaredNorm();
        effective = 1e-10 * trace / static_cast<double>(d) + extra_ridge;
    }
    const Eigen::VectorXd rhs = slack * (push.transpose() * target);
    return solve_two_term(prox, 1.0, push, slack, effective, rhs, order);
}

TwinModel finish(Eigen::VectorXd u, Eigen::VectorXd v, Prepared prep,
                 const KernelSpec& spec, DecisionRule rule) {
    TwinModel m;
    const Eigen::Index d = u.size();
    m.w1 = u.head(d - 1);
    m.b1 = u[d - 1];
    m.w2 = v.head(d - 1);
    m.b2 = v[d - 1];
    m.spec = spec;
    m.basis = std::move(prep.basis);
    m.rule = rule;
    return m;
}

// Shared energy-model fit; lstsvm is the e1 = e2 = 1 case with the
// perpendicular rule. Plane 1 stays close to class +1 while pushing class -1
// to plane value -e2; plane 2 mirrors with +e1. When both class blocks are
// small relative to the system dimension, the solve factorizes only the
// reduced blocks — opposite-class block first when p <= q, own-class block
// first otherwise (the correction then handles the other block).
TwinModel fit_energy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     const KernelSpec& spec, double slack1, double slack2,
                     double e1, double e2, double reg1, double reg2,
                     double extra_ridge, DecisionRule rule) {
    Prepared prep = prepare(a, b, spec);
    const FoldOrder order = a.rows() <= b.rows() ? FoldOrder::g_first : FoldOrder::f_first;

    const Eigen::VectorXd target1 = Eigen::VectorXd::Constant(prep.opp.rows(), -e2);
    Eigen::VectorXd u = solve_plane(prep.own, prep.opp, slack1, reg1, extra_ridge, target1, order);

    // For plane 2 the roles swap: proximal to class -1, pushed from class +1.
    const Eigen::VectorXd target2 = Eigen::VectorXd::Constant(prep.own.rows(), +e1);
    Eigen::VectorXd v = solve_plane(prep.opp, prep.own, slack2, reg2, extra_ridge, target2, order);
    return finish(std::move(u), std::move(v), std::move(prep), spec, rule);
}

}  // namespace

Eigen::MatrixXd TwinModel::plane_values(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd feats;
    if (basis.rows() > 0) {
        if (x.cols() != basis.cols()) throw ShapeError("predict: feature count mismatch");
        feats = gram(x, basis, spec);
    } else {
        if (x.cols() != w1.size()) throw ShapeError("predict: feature count mismatch");
        feats = x;
    }
    Eigen::MatrixXd f(x.rows(), 2);
    f.col(0) = (feats * w1).array() + b1;
    f.col(1) = (feats * w2).array() + b2;
    return f;
}

TwinModel fit_lstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     const SolverParams& params, const KernelSpec& spec) {
    check_positive(params.c1, "c1");
    check_positive(params.c2, "c2");
    return fit_energy(a, b, spec, params.c1, params.c2, 1.0, 1.0, -1.0, -1.0, 0.0,
                      DecisionRule::perpendicular);
}

TwinModel fit_elstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const SolverParams& params, const KernelSpec& spec) {
    check_positive(params.c1, "c1");
    check_positive(params.c2, "c2");
    check_energy(params.e1, "e1");
    check_energy(params.e2, "e2");
    return fit_energy(a, b, spec, params.c1, params.c2, params.e1, params.e2, -1.0, -1.0,
                      0.0, DecisionRule::ratio);
}

TwinModel fit_elstsvm_ridged(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                             const ElsParams& params, const KernelSpec& spec,
                             double extra_ridge) {
    check_positive(params.c1, "c1");
    check_positive(params.c2, "c2");
    check_energy(params.e1, "e1");
    check_energy(params.e2, "e2");
    if (!(extra_ridge > 0.0)) throw ContractError("solver: extra_ridge must be > 0");
    return fit_energy(a, b, spec, params.c1, params.c2, params.e1, params.e2, -1.0, -1.0,
                      extra_ridge, DecisionRule::ratio);
}

TwinModel fit_relstsvm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       const SolverParams& params, const KernelSpec& spec) {
    check_positive(params.c1, "c1");
    check_positive(params.c2, "c2");
    check_positive(params.c3, "c3");
    check_positive(params.c4, "c4");
    check_energy(params.e1, "e1");
    check_energy(params.e2, "e2");
    return fit_energy(a, b, spec, params.c1, params.c2, params.e1, params.e2,
                      params.c3, params.c4, 0.0, DecisionRule::ratio);
}

TwinModel fit_weighted(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       const Eigen::VectorXd& s1, const Eigen::VectorXd& s2,
                       const SolverParams& params, const KernelSpec& spec) {
    check_positive(params.c1, "c1");
    check_positive(params.c2, "c2");
    check_positive(params.c3, "c3");
    check_positive(params.c4, "c4");
    check_energy(params.e1, "e1");
    check_energy(params.e2, "e2");
    if (s1.size() != a.rows() || s2.size() != b.rows()) {
        throw ContractError("fit_weighted: weight lengths must match class sizes");
    }
    if ((s1.array() < 0.0).any() || (s2.array() < 0.0).any()) {
        throw ContractError("fit_weighted: weights must be non-negative");
    }

    Prepared prep = prepare(a, b, spec);
    const FoldOrder order = a.rows() <= b.rows() ? FoldOrder::g_first : FoldOrder::f_first;

    // Plane 1: weights scale the class -1 slack, so the pushed block becomes
    // S2 [B 1] and the energy target -e2 picks up S2 as well.
    const Eigen::MatrixXd pushed1 = s2.asDiagonal() * prep.opp;
    const Eigen::VectorXd target1 = -params.e2 * s2;
    Eigen::VectorXd u = solve_plane(prep.own, pushed1, params.c1, params.c2, 0.0, target1, order);

    const Eigen::MatrixXd pushed2 = s1.asDiagonal() * prep.own;
    const Eigen::VectorXd target2 = +params.e1 * s1;
    Eigen::VectorXd v = solve_plane(prep.opp, pushed2, params.c3, params.c4, 0.0, target2, order);

    return finish(std::move(u), std::move(v), std::move(prep), spec, DecisionRule::ratio);
}

Eigen::VectorXi predict(const TwinModel& model, const Eigen::MatrixXd& x) {
    const Eigen::MatrixXd f = model.plane_values(x);
    Eigen::VectorXi labels(x.rows());
    const double tiny = std::numeric_limits<double>::min();
    const double n1 = std::max(model.w1.norm(), tiny);
    const double n2 = std::max(model.w2.norm(), tiny);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        if (model.rule == DecisionRule::perpendicular) {
            labels[i] = std::abs(f(i, 0)) / n1 <= std::abs(f(i, 1)) / n2 ? +1 : -1;
        } else {
            labels[i] = std::abs(f(i, 0)) <= std::abs(f(i, 1)) ? +1 : -1;
        }
    }
    return labels;
}

namespace {

void write_vector(std::ostream& out, const char* tag, const Eigen::VectorXd& v) {
    out << tag << ' ' << v.size();
    for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << v[i];
    out << '\n';
}

Eigen::VectorXd read_vector(std::istream& in, const std::string& tag) {
    std::string seen;
    Eigen::Index len = 0;
    if (!(in >> seen >> len) || seen != tag || len < 0) {
        throw FormatError("model: expected '" + tag + "' section");
    }
    Eigen::VectorXd v(len);
    for (Eigen::Index i = 0; i < len; ++i) {
        if (!(in >> v[i])) throw FormatError("model: truncated '" + tag + "' section");
    }
    return v;
}

}  // namespace

void save_model(const TwinModel& model, std::ostream& out) {
    out.precision(17);
    out << "twinplane-model 1\n";
    if (model.spec.family == KernelFamily::linear) {
        out << "kernel linear\n";
    } else {
        out << "kernel gaussian " << model.spec.sigma << '\n';
    }
    out << "rule " << (model.rule == DecisionRule::perpendicular ? "perpendicular" : "ratio")
        << '\n';
    write_vector(out, "w1", model.w1);
    out << "b1 " << model.b1 << '\n';
    write_vector(out, "w2", model.w2);
    out << "b2 " << model.b2 << '\n';
    out << "basis " << model.basis.rows() << ' ' << model.basis.cols() << '\n';
    for (Eigen::Index i = 0; i < model.basis.rows(); ++i) {
        for (Eigen::Index j = 0; j < model.basis.cols(); ++j) {
            out << model.basis(i, j) << (j + 1 == model.basis.cols() ? '\n' : ' ');
        }
    }
    out << "end\n";
}

void save_model(const TwinModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    save_model(model, out);
    if (!out) throw IoError("write failed for " + path);
}

TwinModel load_model(std::istream& in) {
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "twinplane-model" || version != 1) {
        throw FormatError("model: bad header");
    }
    TwinModel m;
    std::string kind;
    if (!(in >> word >> kind) || word != "kernel") throw FormatError("model: missing kernel line");
    if (kind == "linear") {
        m.spec.family = KernelFamily::linear;
    } else if (kind == "gaussian") {
        m.spec.family = KernelFamily::gaussian;
        if (!(in >> m.spec.sigma)) throw FormatError("model: missing sigma");
    } else {
        throw FormatError("model: unknown kernel '" + kind + "'");
    }
    if (!(in >> word >> kind) || word != "rule") throw FormatError("model: missing rule line");
    if (kind == "perpendicular") m.rule = DecisionRule::perpendicular;
    else if (kind == "ratio") m.rule = DecisionRule::ratio;
    else throw FormatError("model: unknown rule '" + kind + "'");

    m.w1 = read_vector(in, "w1");
    if (!(in >> word >> m.b1) || word != "b1") throw FormatError("model: missing b1");
    m.w2 = read_vector(in, "w2");
    if (!(in >> word >> m.b2) || word != "b2") throw FormatError("model: missing b2");

    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    if (!(in >> word >> rows >> cols) || word != "basis" || rows < 0 || cols < 0) {
        throw FormatError("model: missing basis header");
    }
    m.basis.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> m.basis(i, j))) throw FormatError("model: truncated basis");
        }
    }
    if (!(in >> word) || word != "end") throw FormatError("model: missing end marker");
    if (m.w1.size() != m.w2.size()) throw FormatError("model: coefficient length mismatch");
    return m;
}

TwinModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_model(in);
}

}  // namespace twinsvm
