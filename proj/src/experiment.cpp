#include "twinsvm/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twinsvm/errors.hpp"
#include "twinsvm/rng.hpp"

namespace twinsvm {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

double parse_number(const std::string& v, const std::string& what) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used == v.size() && std::isfinite(x)) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("bad number '" + v + "' for " + what);
}

bool parse_bool(const std::string& v, const std::string& what) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ConfigError("bad boolean '" + v + "' for " + what);
}

std::vector<double> parse_grid(const std::string& v, const std::string& what) {
    std::vector<double> out;
    for (const auto& tok : split_list(v, ',')) out.push_back(parse_number(tok, what));
    if (out.empty()) throw ConfigError("empty grid for " + what);
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 finalizer over seed + salt: decorrelates per-dataset streams.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Minimal CSV reader honoring double-quoted cells.
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string family_name(KernelFamily f) {
    return f == KernelFamily::linear ? "linear" : "gaussian";
}

struct RowResult {
    std::string dataset;
    std::string model;
    std::string kernel;  // family name
    bool ok = false;
    GridSearchResult best;
    double auc_fraction = 0.0;
    double train_seconds = 0.0;
    std::string error;
};

std::pair<Dataset, Dataset> stratified_split(const Dataset& d, double frac,
                                             std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Eigen::Index> train_idx;
    std::vector<Eigen::Index> test_idx;
    for (int label : {+1, -1}) {
        auto idx = d.class_indices(label);
        if (idx.size() < 2) {
            throw DegenerateDatasetError(d.name + ": class too small to split");
        }
        rng.shuffle(idx);
        const auto n_train = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::lround(frac * static_cast<double>(idx.size()))), 1,
            idx.size() - 1);
        train_idx.insert(train_idx.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
        test_idx.insert(test_idx.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {subset(d, train_idx), subset(d, test_idx)};
}

void write_results_csv(const std::string& path, const std::vector<RowResult>& rows,
                       bool timing) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "dataset,model,kernel,sigma,c1,c2,c3,c4,e1,e2,auc,train_seconds,error\n";
    for (const RowResult& r : rows) {
        out << csv_escape(r.dataset) << ',' << r.model << ',' << r.kernel << ',';
        if (!r.ok) {
            out << ",,,,,,,,," << csv_escape(r.error) << '\n';
            continue;
        }
        const SolverParams& p = r.best.params;
        const bool gaussian = r.best.kernel.family == KernelFamily::gaussian;
        const bool two_c = p.model == ModelKind::relstsvm || p.model == ModelKind::weighted_relstsvm;
        const bool energy = p.model != ModelKind::lstsvm;
        out << (gaussian ? format_number(r.best.kernel.sigma) : "") << ','
            << format_number(p.c1) << ',' << format_number(p.c2) << ','
            << (two_c ? format_number(p.c3) : "") << ',' << (two_c ? format_number(p.c4) : "") << ','
            << (energy ? format_number(p.e1) : "") << ',' << (energy ? format_number(p.e2) : "") << ','
            << format_number(100.0 * r.auc_fraction) << ','
            << (timing ? format_number(r.train_seconds) : "") << ",\n";
    }
    if (!out) throw IoError("write failed for " + path);
}

// One kernel family's worth of complete (dataset x model) scores.
struct PivotGroup {
    std::string family;  // "" when the source had no kernel grouping
    std::vector<std::string> models;
    std::vector<std::string> datasets;
    Eigen::MatrixXd scores;
};

void write_rank_outputs(const PivotGroup& g, const std::string& dir,
                        const std::string& suffix) {
    const RankTable rt = rank_table(g.scores);
    const int k = static_cast<int>(g.models.size());
    const int n = static_cast<int>(g.datasets.size());

    {
        std::ofstream out(dir + "/ranks" + suffix + ".csv");
        if (!out) throw IoError("cannot write ranks" + suffix + ".csv");
        out << "dataset";
        for (const auto& m : g.models) out << ',' << m;
        out << '\n';
        for (int i = 0; i < n; ++i) {
            out << csv_escape(g.datasets[static_cast<std::size_t>(i)]);
            for (int j = 0; j < k; ++j) out << ',' << format_number(rt.ranks(i, j));
            out << '\n';
        }
        out << "avg_rank";
        for (int j = 0; j < k; ++j) out << ',' << format_number(rt.avg_ranks[j]);
        out << '\n';
    }

    const FriedmanResult fr = friedman(rt);
    double cd05 = 0.0;
    double cd10 = 0.0;
    bool have_cd = true;
    try {
        cd05 = nemenyi_cd(k, n, nemenyi_q(k, 0.05));
        cd10 = nemenyi_cd(k, n, nemenyi_q(k, 0.10));
    } catch (const ContractError&) {
        have_cd = false;  // no tabulated q for this k
    }

    {
        std::ofstream out(dir + "/stats" + suffix + ".txt");
        if (!out) throw IoError("cannot write stats" + suffix + ".txt");
        if (!g.family.empty()) out << "kernel " << g.family << '\n';
        out << "datasets " << n << '\n' << "models " << k << '\n';
        for (int j = 0; j < k; ++j) {
            out << "avg_rank " << g.models[static_cast<std::size_t>(j)] << ' '
                << format_number(rt.avg_ranks[j]) << '\n';
        }
        out << "chi2_f " << format_number(fr.chi2) << '\n';
        out << "f_f " << format_number(fr.ff) << '\n';
        out << "dof " << fr.dof1 << ' ' << fr.dof2 << '\n';
        if (have_cd) {
            out << "cd_0.05 " << format_number(cd05) << '\n';
            out << "cd_0.10 " << format_number(cd10) << '\n';
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    const double gap = std::abs(rt.avg_ranks[a] - rt.avg_ranks[b]);
                    if (gap > cd10) {
                        const bool a_better = rt.avg_ranks[a] < rt.avg_ranks[b];
                        out << "significant_0.10 " << g.models[static_cast<std::size_t>(a_better ? a : b)]
                            << " over " << g.models[static_cast<std::size_t>(a_better ? b : a)] << " gap "
                            << format_number(gap) << '\n';
                    }
                }
            }
        } else {
            out << "cd unavailable (no tabulated q for k=" << k << ")\n";
        }
    }

    if (have_cd) {
        std::ofstream out(dir + "/cd" + suffix + ".csv");
        if (!out) throw IoError("cannot write cd" + suffix + ".csv");
        out << "algorithm,avg_rank,cd\n";
        for (int j = 0; j < k; ++j) {
            out << g.models[static_cast<std::size_t>(j)] << ',' << format_number(rt.avg_ranks[j])
                << ',' << format_number(cd10) << '\n';
        }
    }
}

struct ResultRow {
    std::string dataset;
    std::string model;
    std::string kernel;
    bool has_auc = false;
    double auc = 0.0;
};

std::vector<ResultRow> read_results_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + " line 1: empty file");
    const auto header = csv_split(trim(line));
    const auto col_of = [&](const std::string& name) -> std::ptrdiff_t {
        const auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : it - header.begin();
    };
    const std::ptrdiff_t c_dataset = col_of("dataset");
    const std::ptrdiff_t c_model = col_of("model");
    const std::ptrdiff_t c_auc = col_of("auc");
    const std::ptrdiff_t c_kernel = col_of("kernel");
    const std::ptrdiff_t c_error = col_of("error");
    if (c_dataset < 0 || c_model < 0 || c_auc < 0) {
        throw ParseError(path + " line 1: need columns dataset, model, auc");
    }

    std::vector<ResultRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto cells = csv_split(line);
        if (cells.size() != header.size()) {
            throw ParseError(path + " line " + std::to_string(lineno) + ": has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        ResultRow r;
        r.dataset = cells[static_cast<std::size_t>(c_dataset)];
        r.model = cells[static_cast<std::size_t>(c_model)];
        if (c_kernel >= 0) r.kernel = cells[static_cast<std::size_t>(c_kernel)];
        if (c_error >= 0 && !trim(cells[static_cast<std::size_t>(c_error)]).empty()) {
            continue;  // failed row: no score to rank
        }
        const std::string auc_text = trim(cells[static_cast<std::size_t>(c_auc)]);
        if (auc_text.empty()) continue;
        try {
            std::size_t used = 0;
            r.auc = std::stod(auc_text, &used);
            if (used != auc_text.size() || !std::isfinite(r.auc)) throw std::invalid_argument(auc_text);
        } catch (const std::exception&) {
            throw ParseError(path + " line " + std::to_string(lineno) + ": bad auc value '" +
                             auc_text + "'");
        }
        r.has_auc = true;
        rows.push_back(r);
    }
    return rows;
}

// Groups rows by kernel tag and pivots each group into a complete
// dataset x model score matrix (datasets missing any model are dropped).
std::vector<PivotGroup> pivot_rows(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw ContractError("ranking needs at least one scored row");
    std::vector<std::string> families;
    for (const auto& r : rows) {
        if (std::find(families.begin(), families.end(), r.kernel) == families.end()) {
            families.push_back(r.kernel);
        }
    }

    std::vector<PivotGroup> groups;
    for (const auto& fam : families) {
        PivotGroup g;
        g.family = families.size() > 1 ? fam : (fam.empty() ? "" : fam);
        std::vector<std::string> datasets;
        for (const auto& r : rows) {
            if (r.kernel != fam) continue;
            if (std::find(g.models.begin(), g.models.end(), r.model) == g.models.end())
                g.models.push_back(r.model);
            if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end())
                datasets.push_back(r.dataset);
        }
        if (g.models.size() < 2) {
            throw ContractError("ranking needs at least 2 models (kernel '" + fam + "' has " +
                                std::to_string(g.models.size()) + ")");
        }
        const auto score_of = [&](const std::string& ds, const std::string& model,
                                  double& out) -> bool {
            for (const auto& r : rows) {
                if (r.kernel == fam && r.dataset == ds && r.model == model && r.has_auc) {
                    out = r.auc;
                    return true;
                }
            }
            return false;
        };
        std::vector<std::vector<double>> kept;
        for (const auto& ds : datasets) {
            std::vector<double> row;
            bool complete = true;
            for (const auto& model : g.models) {
                double v = 0.0;
                if (!score_of(ds, model, v)) {
                    complete = false;
                    break;
                }
                row.push_back(v);
            }
            if (complete) {
                g.datasets.push_back(ds);
                kept.push_back(row);
            }
        }
        if (kept.empty()) {
            throw ContractError("ranking needs at least 1 dataset scored by every model (kernel '" +
                                fam + "')");
        }
        g.scores.resize(static_cast<Eigen::Index>(kept.size()),
                        static_cast<Eigen::Index>(g.models.size()));
        for (std::size_t i = 0; i < kept.size(); ++i)
            for (std::size_t j = 0; j < kept[i].size(); ++j)
                g.scores(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kept[i][j];
        groups.push_back(std::move(g));
    }
    return groups;
}

void apply_workers(int workers) {
    int n = workers;
    if (n <= 0) {
        if (const char* env = std::getenv("TWINSVM_WORKERS")) {
            try {
                n = std::stoi(env);
            } catch (const std::exception&) {
                throw ConfigError("TWINSVM_WORKERS must be an integer");
            }
        }
    }
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_config_text(in, path);
}

ExperimentConfig parse_config_text(std::istream& in, const std::string& origin) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + " line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));

        if (key == "datasets") {
            cfg.datasets = split_list(value, ';');
        } else if (key == "models") {
            cfg.models.clear();
            for (const auto& name : split_list(value, ',')) {
                const auto id = model_from_string(name);
                if (!id) throw ConfigError(origin + ": unknown model '" + name + "'");
                cfg.models.push_back(*id);
            }
        } else if (key == "kernel") {
            if (value == "linear") cfg.kernel = KernelChoice::linear;
            else if (value == "gaussian") cfg.kernel = KernelChoice::gaussian;
            else if (value == "both") cfg.kernel = KernelChoice::both;
            else throw ConfigError(origin + ": kernel must be linear, gaussian, or both");
        } else if (key == "folds") {
            cfg.folds = static_cast<int>(parse_number(value, key));
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_number(value, key));
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "c12_grid") {
            cfg.grids.c12 = parse_grid(value, key);
        } else if (key == "c34_grid") {
            cfg.grids.c34 = parse_grid(value, key);
        } else if (key == "e1_grid") {
            cfg.grids.e1 = parse_grid(value, key);
        } else if (key == "e2_grid") {
            cfg.grids.e2 = parse_grid(value, key);
        } else if (key == "sigma_grid") {
            cfg.grids.sigma = parse_grid(value, key);
        } else if (key == "protocol") {
            if (value == "cv") cfg.protocol = Protocol::cv_mean;
            else if (value == "holdout") cfg.protocol = Protocol::holdout;
            else throw ConfigError(origin + ": protocol must be cv or holdout");
        } else if (key == "train_fraction") {
            cfg.train_fraction = parse_number(value, key);
            if (cfg.train_fraction <= 0.0 || cfg.train_fraction >= 1.0) {
                throw ConfigError(origin + ": train_fraction must lie in (0, 1)");
            }
        } else if (key == "normalize") {
            cfg.normalize = parse_bool(value, key);
        } else if (key == "timing") {
            cfg.timing = parse_bool(value, key);
        } else if (key == "save_models") {
            cfg.save_models = parse_bool(value, key);
        } else if (key == "ifma_delta") {
            cfg.membership.ifma_delta = parse_number(value, key);
        } else if (key == "ifma_gamma") {
            if (value == "auto") cfg.membership.ifma_gamma.reset();
            else cfg.membership.ifma_gamma = parse_number(value, key);
        } else if (key == "pfma_delta") {
            cfg.membership.pfma_delta = parse_number(value, key);
        } else if (key == "pfma_norm") {
            if (value == "global") cfg.membership.pfma_norm = PfmaNorm::global;
            else if (value == "per_class") cfg.membership.pfma_norm = PfmaNorm::per_class;
            else throw ConfigError(origin + ": pfma_norm must be global or per_class");
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(parse_number(value, key));
        } else {
            throw ConfigError(origin + " line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        }
    }
    if (cfg.datasets.empty()) throw ConfigError(origin + ": at least one dataset required");
    if (cfg.models.empty()) throw ConfigError(origin + ": at least one model required");
    if (cfg.folds < 2) throw ConfigError(origin + ": folds must be >= 2");
    return cfg;
}

Dataset resolve_dataset(const std::string& ref, std::uint64_t seed, bool normalize) {
    Dataset d;
    if (ref == "crossplane" || ref.rfind("crossplane:", 0) == 0) {
        Eigen::Index pos = 75;
        Eigen::Index neg = 75;
        double noise = 0.0;
        std::uint64_t gen_seed = seed;
        if (ref.size() > 10 && ref[10] == ':') {
            for (const auto& pair : split_list(ref.substr(11), ',')) {
                const std::size_t eq = pair.find('=');
                if (eq == std::string::npos) {
                    throw ConfigError("bad crossplane field '" + pair + "'");
                }
                const std::string k = trim(pair.substr(0, eq));
                const std::string v = trim(pair.substr(eq + 1));
                if (k == "pos") pos = static_cast<Eigen::Index>(parse_number(v, k));
                else if (k == "neg") neg = static_cast<Eigen::Index>(parse_number(v, k));
                else if (k == "noise") noise = parse_number(v, k);
                else if (k == "seed") gen_seed = static_cast<std::uint64_t>(parse_number(v, k));
                else throw ConfigError("unknown crossplane field '" + k + "'");
            }
        }
        d = generate_crossplane(pos, neg, noise, gen_seed);
    } else if (ref.size() > 4 && ref.substr(ref.size() - 4) == ".dat") {
        d = load_keel(ref);
    } else {
        d = load_csv(ref);
    }
    return normalize ? minmax_scale(d) : d;
}

RunSummary run_experiment(const ExperimentConfig& cfg) {
    apply_workers(cfg.workers);
    fs::create_directories(cfg.output_dir);

    std::vector<Dataset> datasets;
    for (std::size_t i = 0; i < cfg.datasets.size(); ++i) {
        Dataset d = resolve_dataset(cfg.datasets[i], mix_seed(cfg.seed, i), cfg.normalize);
        // Disambiguate repeated names (e.g. two crossplane specs of equal size).
        int copy = 1;
        std::string name = d.name;
        const auto taken = [&](const std::string& nm) {
            return std::any_of(datasets.begin(), datasets.end(),
                               [&](const Dataset& other) { return other.name == nm; });
        };
        while (taken(name)) name = d.name + "_" + std::to_string(++copy);
        d.name = name;
        datasets.push_back(std::move(d));
    }

    std::vector<KernelFamily> families;
    if (cfg.kernel != KernelChoice::gaussian) families.push_back(KernelFamily::linear);
    if (cfg.kernel != KernelChoice::linear) families.push_back(KernelFamily::gaussian);

    std::vector<RowResult> rows;
    if (cfg.save_models) fs::create_directories(cfg.output_dir + "/models");
    for (const KernelFamily family : families) {
        for (std::size_t di = 0; di < datasets.size(); ++di) {
            const Dataset& d = datasets[di];
            const std::uint64_t row_seed = mix_seed(cfg.seed, di);
            for (const ModelId model : cfg.models) {
                RowResult row;
                row.dataset = d.name;
                row.model = to_string(model);
                row.kernel = family_name(family);
                try {
                    const Dataset* fit_data = &d;
                    Dataset train, test;
                    if (cfg.protocol == Protocol::holdout) {
                        std::tie(train, test) = stratified_split(d, cfg.train_fraction,
                                                                 mix_seed(row_seed, 0x51u));
                        fit_data = &train;
                    }
                    row.best = grid_search_cv(*fit_data, model, cfg.grids, family, cfg.folds,
                                              row_seed, cfg.membership);
                    const auto t0 = std::chrono::steady_clock::now();
                    const TwinModel final_model =
                        train_model(*fit_data, model, row.best.params, row.best.kernel,
                                    cfg.membership);
                    row.train_seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    row.auc_fraction = cfg.protocol == Protocol::holdout
                                           ? auc(test.y, predict(final_model, test.x))
                                           : row.best.mean_auc;
                    if (cfg.save_models) {
                        save_model(final_model, cfg.output_dir + "/models/" + row.kernel + "_" +
                                                    d.name + "_" + row.model + ".txt");
                    }
                    row.ok = true;
                } catch (const Error& e) {
                    row.error = e.what();
                } catch (const std::exception& e) {
                    row.error = std::string("unexpected: ") + e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }

    RunSummary summary;
    summary.rows = static_cast<int>(rows.size());
    summary.failures = static_cast<int>(std::count_if(
        rows.begin(), rows.end(), [](const RowResult& r) { return !r.ok; }));
    summary.results_path = cfg.output_dir + "/results.csv";
    write_results_csv(summary.results_path, rows, cfg.timing);

    // Ranking re-reads the CSV so the published statistics always agree with
    // a standalone rank_report over the same file.
    if (cfg.models.size() >= 2) {
        try {
            rank_report(summary.results_path, cfg.output_dir);
        } catch (const Error& e) {
            summary.note = std::string("ranking skipped: ") + e.what();
        }
    } else {
        summary.note = "ranking skipped: fewer than 2 models";
    }
    return summary;
}

void sweep_energy(const ExperimentConfig& cfg, ModelId model,
                  const std::vector<double>& e1_grid,
                  const std::vector<double>& e2_grid) {
    if (!is_energy_model(model)) {
        throw ContractError("sweep_energy: " + to_string(model) + " has no energy parameters");
    }
    if (e1_grid.empty() || e2_grid.empty()) throw ContractError("sweep_energy: empty grid");
    for (const double e : e1_grid) {
        if (!(e > 0.0) || e > 1.0) throw ContractError("sweep_energy: e1 values must lie in (0, 1]");
    }
    for (const double e : e2_grid) {
        if (!(e > 0.0) || e > 1.0) throw ContractError("sweep_energy: e2 values must lie in (0, 1]");
    }
    apply_workers(cfg.workers);
    fs::create_directories(cfg.output_dir);
    const KernelFamily family =
        cfg.kernel == KernelChoice::gaussian ? KernelFamily::gaussian : KernelFamily::linear;

    for (std::size_t di = 0; di < cfg.datasets.size(); ++di) {
        const Dataset d = resolve_dataset(cfg.datasets[di], mix_seed(cfg.seed, di), cfg.normalize);
        const std::string path = cfg.output_dir + "/energy_surface" +
                                 (cfg.datasets.size() > 1 ? "_" + d.name : "") + ".csv";
        std::ofstream out(path);
        if (!out) throw IoError("cannot write " + path);
        out << "e1,e2,auc\n";
        for (const double e1 : e1_grid) {
            for (const double e2 : e2_grid) {
                ParamGrids grids = cfg.grids;
                grids.e1 = {e1};
                grids.e2 = {e2};
                const GridSearchResult r = grid_search_cv(d, model, grids, family, cfg.folds,
                                                          mix_seed(cfg.seed, di), cfg.membership);
                out << format_number(e1) << ',' << format_number(e2) << ','
                    << format_number(100.0 * r.mean_auc) << '\n';
            }
        }
        if (!out) throw IoError("write failed for " + path);
    }
}

void rank_report(const std::string& results_csv, const std::string& output_dir) {
    const auto rows = read_results_csv(results_csv);
    const auto groups = pivot_rows(rows);
    fs::create_directories(output_dir);
    const bool suffixed = groups.size() > 1;
    for (const auto& g : groups) {
        const std::string suffix = suffixed ? "_" + g.family : "";
        write_rank_outputs(g, output_dir, suffix);
    }
}

}  // namespace twinsvm
