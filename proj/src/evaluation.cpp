#include "twinsvm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>

#include "twinsvm/errors.hpp"

namespace twinsvm {

Confusion confusion(const Eigen::VectorXi& truth, const Eigen::VectorXi& predicted) {
    if (truth.size() != predicted.size()) throw ShapeError("confusion: length mismatch");
    Eigen::Index pos = 0, neg = 0, tp = 0, fp = 0;
    for (Eigen::Index i = 0; i < truth.size(); ++i) {
        if (truth[i] != 1 && truth[i] != -1) throw ContractError("confusion: labels must be +1/-1");
        if (predicted[i] != 1 && predicted[i] != -1) throw ContractError("confusion: labels must be +1/-1");
        if (truth[i] == 1) {
            ++pos;
            if (predicted[i] == 1) ++tp;
        } else {
            ++neg;
            if (predicted[i] == 1) ++fp;
        }
    }
    if (pos == 0 || neg == 0) {
        throw UndefinedMetricError("auc: truth vector contains a single class");
    }
    Confusion c;
    c.tp_rate = static_cast<double>(tp) / static_cast<double>(pos);
    c.fp_rate = static_cast<double>(fp) / static_cast<double>(neg);
    return c;
}

double auc(const Eigen::VectorXi& truth, const Eigen::VectorXi& predicted) {
    const Confusion c = confusion(truth, predicted);
    return (1.0 + c.tp_rate - c.fp_rate) / 2.0;
}

RankTable rank_table(const Eigen::MatrixXd& scores) {
    const Eigen::Index n = scores.rows();
    const Eigen::Index k = scores.cols();
    if (n < 1 || k < 2) throw ContractError("rank_table: need at least 1 row and 2 columns");
    if (!scores.allFinite()) throw ContractError("rank_table: scores must be finite");

    RankTable rt;
    rt.scores = scores;
    rt.ranks.resize(n, k);
    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), Eigen::Index{0});
        std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
            return scores(i, a) > scores(i, b);
        });
        // Walk runs of exactly equal scores; each run shares the average of
        // the rank positions it covers.
        Eigen::Index start = 0;
        while (start < k) {
            Eigen::Index stop = start;
            while (stop + 1 < k && scores(i, idx[static_cast<std::size_t>(stop + 1)]) ==
                                       scores(i, idx[static_cast<std::size_t>(start)])) {
                ++stop;
            }
            const double shared = static_cast<double>(start + stop + 2) / 2.0;  // 1-based
            for (Eigen::Index t = start; t <= stop; ++t) {
                rt.ranks(i, idx[static_cast<std::size_t>(t)]) = shared;
            }
            start = stop + 1;
        }
    }
    rt.avg_ranks = rt.ranks.colwise().mean();
    return rt;
}

FriedmanResult friedman(const RankTable& rt) {
    const double n = static_cast<double>(rt.ranks.rows());
    const double k = static_cast<double>(rt.ranks.cols());
    FriedmanResult r;
    const double sum_sq = rt.avg_ranks.squaredNorm();
    r.chi2 = 12.0 * n / (k * (k + 1.0)) * (sum_sq - k * (k + 1.0) * (k + 1.0) / 4.0);
    const double denom = n * (k - 1.0) - r.chi2;
    r.ff = denom > 0.0 ? (n - 1.0) * r.chi2 / denom : std::numeric_limits<double>::infinity();
    r.dof1 = static_cast<int>(k) - 1;
    r.dof2 = (static_cast<int>(k) - 1) * (static_cast<int>(n) - 1);
    return r;
}

double nemenyi_cd(int k, int n_datasets, double q_alpha) {
    if (k < 2 || n_datasets < 1) throw ContractError("nemenyi_cd: need k >= 2, N >= 1");
    if (!(q_alpha > 0.0)) throw ContractError("nemenyi_cd: q_alpha must be > 0");
    const double kd = static_cast<double>(k);
    return q_alpha * std::sqrt(kd * (kd + 1.0) / (6.0 * static_cast<double>(n_datasets)));
}

double nemenyi_q(int k, double alpha) {
    // Studentized-range based critical values for the two-tailed post-hoc
    // comparison, k = 2..10.
    static const double q05[] = {1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164};
    static const double q10[] = {1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780, 2.855, 2.920};
    if (k < 2 || k > 10) throw ContractError("nemenyi_q: k must be in [2, 10]");
    if (alpha == 0.05) return q05[k - 2];
    if (alpha == 0.10) return q10[k - 2];
    throw ContractError("nemenyi_q: alpha must be 0.05 or 0.10");
}

std::string to_string(ModelId id) {
    switch (id) {
        case ModelId::lstsvm: return "lstsvm";
        case ModelId::elstsvm: return "elstsvm";
        case ModelId::relstsvm: return "relstsvm";
        case ModelId::if_relstsvm: return "if_relstsvm";
        case ModelId::f_relstsvm: return "f_relstsvm";
    }
    return "unknown";
}

std::optional<ModelId> model_from_string(const std::string& name) {
    if (name == "lstsvm") return ModelId::lstsvm;
    if (name == "elstsvm") return ModelId::elstsvm;
    if (name == "relstsvm") return ModelId::relstsvm;
    if (name == "if_relstsvm") return ModelId::if_relstsvm;
    if (name == "f_relstsvm") return ModelId::f_relstsvm;
    return std::nullopt;
}

bool is_energy_model(ModelId id) { return id != ModelId::lstsvm; }

bool is_weighted_model(ModelId id) {
    return id == ModelId::if_relstsvm || id == ModelId::f_relstsvm;
}

TwinModel train_model(const Dataset& d, ModelId id, const SolverParams& params,
                      const KernelSpec& spec, const MembershipSettings& ms) {
    const Eigen::MatrixXd a = d.class_matrix(+1);
    const Eigen::MatrixXd b = d.class_matrix(-1);
    switch (id) {
        case ModelId::lstsvm: return fit_lstsvm(a, b, params, spec);
        case ModelId::elstsvm: return fit_elstsvm(a, b, params, spec);
        case ModelId::relstsvm: return fit_relstsvm(a, b, params, spec);
        default: break;
    }

    Eigen::VectorXd scores;
    WeightScheme scheme;
    if (id == ModelId::if_relstsvm) {
        scheme = WeightScheme::ifma;
        const Eigen::VectorXd mu = ifma_membership(d, spec, ms.ifma_delta);
        const double gamma = ms.ifma_gamma ? *ms.ifma_gamma : median_pairwise_distance(d, spec);
        const Eigen::VectorXd nu = ifma_nonmembership(d, spec, gamma, mu);
        scores = ifma_score(IfNumbers{mu, nu});
    } else {
        scheme = WeightScheme::pfma;
        // The inner plane pair reuses the slack penalties and energies of the
        // model under training (plane-2 slack is c3 in the weighted numbering).
        const ElsParams inner{params.c1, params.c3, params.e1, params.e2};
        scores = pfma_scores(d, spec, inner, ms.pfma_delta, ms.pfma_norm);
    }
    const FuzzyWeights w = weights_from_scores(scores, d, scheme);
    return fit_weighted(a, b, w.s1, w.s2, params, spec);
}

ParamGrids ParamGrids::defaults() {
    ParamGrids g;
    for (int i = -5; i <= 5; ++i) g.c12.push_back(std::pow(10.0, i));
    g.c34 = g.c12;
    g.e1 = {0.6, 0.7, 0.8, 0.9, 1.0};
    g.e2 = g.e1;
    for (int i = -5; i <= 5; ++i) g.sigma.push_back(std::pow(2.0, i));
    return g;
}

GridSearchResult grid_search_cv(const Dataset& d, ModelId model,
                                const ParamGrids& grids, KernelFamily family,
                                int folds, std::uint64_t seed,
                                const MembershipSettings& ms) {
    const bool gaussian = family == KernelFamily::gaussian;
    const bool energy = is_energy_model(model);
    const bool two_c = model != ModelId::lstsvm && model != ModelId::elstsvm;

    const std::vector<double> ones{1.0};
    const std::vector<double>& sigmas = gaussian ? grids.sigma : ones;
    const std::vector<double>& c12 = grids.c12;
    const std::vector<double>& c34 = two_c ? grids.c34 : ones;
    const std::vector<double>& e1s = energy ? grids.e1 : ones;
    const std::vector<double>& e2s = energy ? grids.e2 : ones;
    if (sigmas.empty() || c12.empty() || c34.empty() || e1s.empty() || e2s.empty()) {
        throw ContractError("grid_search_cv: empty grid");
    }

    struct Combo {
        SolverParams params;
        KernelSpec kernel;
    };
    std::vector<Combo> combos;
    for (const double sigma : sigmas)
        for (const double c : c12)
            for (const double cr : c34)
                for (const double e1 : e1s)
                    for (const double e2 : e2s) {
                        Combo combo;
                        combo.params.model = two_c ? (is_weighted_model(model)
                                                          ? ModelKind::weighted_relstsvm
                                                          : ModelKind::relstsvm)
                                                   : (model == ModelId::lstsvm ? ModelKind::lstsvm
                                                                               : ModelKind::elstsvm);
                        combo.params.c1 = combo.params.c2 = c;
                        combo.params.c3 = combo.params.c4 = cr;
                        combo.params.e1 = e1;
                        combo.params.e2 = e2;
                        combo.kernel.family = family;
                        combo.kernel.sigma = sigma;
                        combos.push_back(combo);
                    }

    const FoldAssignment fa = stratified_kfold(d, folds, seed);
    std::vector<Dataset> train_split;
    std::vector<Dataset> val_split;
    for (int f = 0; f < folds; ++f) {
        train_split.push_back(subset(d, fa.train_indices(f)));
        val_split.push_back(subset(d, fa.test_indices(f)));
    }

    std::vector<double> mean_auc(combos.size(), 0.0);
    std::vector<std::exception_ptr> failure(combos.size());
    const Eigen::Index total = static_cast<Eigen::Index>(combos.size());
#pragma omp parallel for schedule(dynamic) if (total > 1)
    for (Eigen::Index c = 0; c < total; ++c) {
        try {
            double sum = 0.0;
            for (int f = 0; f < folds; ++f) {
                const TwinModel fitted =
                    train_model(train_split[static_cast<std::size_t>(f)], model,
                                combos[static_cast<std::size_t>(c)].params,
                                combos[static_cast<std::size_t>(c)].kernel, ms);
                const Dataset& val = val_split[static_cast<std::size_t>(f)];
                sum += auc(val.y, predict(fitted, val.x));
            }
            mean_auc[static_cast<std::size_t>(c)] = sum / static_cast<double>(folds);
        } catch (...) {
            failure[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (const auto& eptr : failure) {
        if (eptr) std::rethrow_exception(eptr);
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < combos.size(); ++c) {
        if (mean_auc[c] > mean_auc[best]) best = c;  // first maximum wins ties
    }
    GridSearchResult result;
    result.params = combos[best].params;
    result.kernel = combos[best].kernel;
    result.mean_auc = mean_auc[best];
    return result;
}

}  // namespace twinsvm
