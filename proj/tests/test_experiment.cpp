#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/tempdir.hpp"
#include "twinsvm/errors.hpp"
#include "twinsvm/experiment.hpp"

using namespace twinsvm;
using testsupport::TempDir;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(bool(in), "missing file ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ExperimentConfig config_from(const std::string& text) {
    std::istringstream in(text);
    return parse_config_text(in, "inline");
}

// stats.txt lines are "key [name] value"; exposes "chi2_f", "f_f",
// "cd_0.05", "cd_0.10", and "avg_rank <model>".
std::map<std::string, double> parse_stats(const std::string& path) {
    std::map<std::string, double> out;
    std::ifstream in(path);
    REQUIRE_MESSAGE(bool(in), "missing stats file ", path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "avg_rank") {
            std::string model;
            double value = 0.0;
            ls >> model >> value;
            out["avg_rank " + model] = value;
        } else if (key == "chi2_f" || key == "f_f" || key == "cd_0.05" || key == "cd_0.10") {
            double value = 0.0;
            ls >> value;
            out[key] = value;
        }
    }
    return out;
}

// Writes a results CSV with one row per (dataset, model) cell of a fixture
// score table; model columns are named m1..mK.
template <int N, int K>
std::string write_fixture_csv(const TempDir& dir, const double (&scores)[N][K]) {
    const std::string path = dir.file("fixture_results.csv");
    std::ofstream out(path);
    out << "dataset,model,auc\n";
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < K; ++j)
            out << "d" << (i + 1) << ",m" << (j + 1) << ',' << scores[i][j] << '\n';
    return path;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config parsing covers every key") {
    const ExperimentConfig cfg = config_from(
        "# comment line\n"
        "datasets = a.csv ; b.dat ; crossplane:pos=10,neg=20\n"
        "models = lstsvm, f_relstsvm\n"
        "kernel = both\n"
        "folds = 3\n"
        "seed = 99\n"
        "output_dir = results_here   # trailing comment\n"
        "c12_grid = 0.1, 1, 10\n"
        "c34_grid = 0.5\n"
        "e1_grid = 0.7, 0.9\n"
        "e2_grid = 1\n"
        "sigma_grid = 0.25, 4\n"
        "protocol = holdout\n"
        "train_fraction = 0.7\n"
        "normalize = true\n"
        "timing = off\n"
        "save_models = on\n"
        "ifma_delta = 0.001\n"
        "ifma_gamma = 2.5\n"
        "pfma_delta = 0.01\n"
        "pfma_norm = per_class\n"
        "workers = 2\n");
    CHECK(cfg.datasets.size() == 3);
    CHECK(cfg.datasets[2] == "crossplane:pos=10,neg=20");
    REQUIRE(cfg.models.size() == 2);
    CHECK(cfg.models[0] == ModelId::lstsvm);
    CHECK(cfg.models[1] == ModelId::f_relstsvm);
    CHECK(cfg.kernel == KernelChoice::both);
    CHECK(cfg.folds == 3);
    CHECK(cfg.seed == 99);
    CHECK(cfg.output_dir == "results_here");
    CHECK(cfg.grids.c12 == std::vector<double>{0.1, 1, 10});
    CHECK(cfg.grids.c34 == std::vector<double>{0.5});
    CHECK(cfg.grids.e1 == std::vector<double>{0.7, 0.9});
    CHECK(cfg.grids.sigma == std::vector<double>{0.25, 4});
    CHECK(cfg.protocol == Protocol::holdout);
    CHECK(cfg.train_fraction == doctest::Approx(0.7));
    CHECK(cfg.normalize);
    CHECK(!cfg.timing);
    CHECK(cfg.save_models);
    CHECK(cfg.membership.ifma_delta == doctest::Approx(0.001));
    REQUIRE(cfg.membership.ifma_gamma.has_value());
    CHECK(*cfg.membership.ifma_gamma == doctest::Approx(2.5));
    CHECK(cfg.membership.pfma_norm == PfmaNorm::per_class);
    CHECK(cfg.workers == 2);

    // 'auto' clears the explicit gamma.
    const ExperimentConfig auto_gamma = config_from(
        "datasets = x.csv\nmodels = lstsvm\nifma_gamma = auto\n");
    CHECK(!auto_gamma.membership.ifma_gamma.has_value());
}

TEST_CASE("config rejection diagnostics") {
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\nnot_a_key = 1\n"), ConfigError);
    try {
        config_from("datasets = x\nmodels = lstsvm\nnot_a_key = 1\n");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("not_a_key") != std::string::npos);
    }
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\njust a line\n"), ConfigError);
    CHECK_THROWS_AS(config_from("models = lstsvm\n"), ConfigError);             // no datasets
    CHECK_THROWS_AS(config_from("datasets = x\n"), ConfigError);                // no models
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = mystery\n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\nfolds = 1\n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\nkernel = cubic\n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\ntiming = maybe\n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\nfolds = many\n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\nc12_grid = \n"), ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\ntrain_fraction = 1.5\n"),
                    ConfigError);
    CHECK_THROWS_AS(config_from("datasets = x\nmodels = lstsvm\npfma_norm = sideways\n"),
                    ConfigError);
}

TEST_CASE("dataset references resolve to generators and files") {
    const Dataset gen = resolve_dataset("crossplane:pos=12,neg=8,noise=0.05,seed=4", 999, false);
    CHECK(gen.name == "crossplane20");
    CHECK(gen.rows() == 20);
    // Generator seed comes from the spec, not the fallback.
    const Dataset fixed = resolve_dataset("crossplane:pos=12,neg=8,noise=0.05,seed=4", 123, false);
    CHECK((gen.x - fixed.x).cwiseAbs().maxCoeff() == 0.0);
    // Without an explicit seed the fallback drives the stream.
    const Dataset fb1 = resolve_dataset("crossplane:pos=12,neg=8", 1, false);
    const Dataset fb2 = resolve_dataset("crossplane:pos=12,neg=8", 2, false);
    CHECK((fb1.x - fb2.x).cwiseAbs().maxCoeff() > 0.0);

    CHECK_THROWS_AS(resolve_dataset("crossplane:radius=2", 1, false), ConfigError);
    CHECK_THROWS_AS(resolve_dataset("crossplane:pos", 1, false), ConfigError);

    TempDir dir("resolve");
    {
        std::ofstream out(dir.file("tiny.dat"));
        out << "@relation tiny\n@attribute f real\n@attribute c {x,y}\n@data\n"
               "1,x\n2,x\n3,y\n";
    }
    const Dataset keel = resolve_dataset(dir.file("tiny.dat"), 1, false);
    CHECK(keel.rows() == 3);
    CHECK(keel.name == "tiny");
    {
        std::ofstream out(dir.file("tiny.csv"));
        out << "0,10,1\n1,20,-1\n2,15,1\n3,30,-1\n";
    }
    const Dataset csv = resolve_dataset(dir.file("tiny.csv"), 1, true);
    CHECK(csv.cols() == 2);
    CHECK(csv.x.minCoeff() == doctest::Approx(0.0));
    CHECK(csv.x.maxCoeff() == doctest::Approx(1.0));  // normalize applied
}

TEST_CASE("separable data scores a perfect AUC for every model") {
    TempDir dir("perfect");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=40,neg=40,noise=0,seed=11\n"
        "models = lstsvm, elstsvm, relstsvm, if_relstsvm, f_relstsvm\n"
        "kernel = linear\n"
        "folds = 5\n"
        "c12_grid = 0.001\n"  // light push penalty keeps the planes on their lines
        "c34_grid = 0.001\n"
        "e1_grid = 0.8\n"
        "e2_grid = 0.8\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    const RunSummary s = run_experiment(cfg);
    CHECK(s.rows == 5);
    CHECK(s.failures == 0);

    const std::string csv = read_file(s.results_path);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "dataset,model,kernel,sigma,c1,c2,c3,c4,e1,e2,auc,train_seconds,error");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",100,") != std::string::npos);  // AUC percent
        CHECK(line.find("crossplane80,") == 0);
    }
    CHECK(rows == 5);
}

TEST_CASE("reruns with timing disabled are byte-identical") {
    TempDir dir("determinism");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=25,neg=20,noise=0.1,seed=3\n"
        "models = lstsvm, relstsvm\n"
        "folds = 5\n"
        "c12_grid = 0.1, 1\n"
        "c34_grid = 1\n"
        "e1_grid = 0.9\n"
        "e2_grid = 0.9\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    run_experiment(cfg);
    const std::string first = read_file(cfg.output_dir + "/results.csv");
    const std::string first_stats = read_file(cfg.output_dir + "/stats.txt");
    run_experiment(cfg);
    CHECK(read_file(cfg.output_dir + "/results.csv") == first);
    CHECK(read_file(cfg.output_dir + "/stats.txt") == first_stats);

    // With timing on, the AUC payload still matches even if seconds differ.
    cfg.timing = true;
    run_experiment(cfg);
    CHECK(read_file(cfg.output_dir + "/results.csv") != first);  // timing column now set
}

TEST_CASE("the inline ranking equals a standalone rank_report run") {
    TempDir dir("inline_rank");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=20,neg=25,noise=0.15,seed=8 ; crossplane:pos=30,neg=15,noise=0.2,seed=9\n"
        "models = lstsvm, elstsvm, relstsvm\n"
        "folds = 5\n"
        "c12_grid = 1\n"
        "c34_grid = 1\n"
        "e1_grid = 0.8\n"
        "e2_grid = 1\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    const RunSummary s = run_experiment(cfg);
    CHECK(s.note.empty());

    rank_report(s.results_path, dir.file("standalone"));
    CHECK(read_file(dir.file("out/stats.txt")) == read_file(dir.file("standalone/stats.txt")));
    CHECK(read_file(dir.file("out/ranks.csv")) == read_file(dir.file("standalone/ranks.csv")));
    CHECK(read_file(dir.file("out/cd.csv")) == read_file(dir.file("standalone/cd.csv")));
}

TEST_CASE("deduplicated dataset names for repeated references") {
    TempDir dir("dedup");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=10,neg=10,noise=0.1,seed=1 ; crossplane:pos=10,neg=10,noise=0.1,seed=2\n"
        "models = lstsvm\n"
        "folds = 3\n"
        "c12_grid = 1\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    run_experiment(cfg);
    const std::string csv = read_file(cfg.output_dir + "/results.csv");
    CHECK(csv.find("crossplane20,") != std::string::npos);
    CHECK(csv.find("crossplane20_2,") != std::string::npos);
}

TEST_CASE("published linear-suite scores reproduce their average ranks and statistic") {
    TempDir dir("fixture_ranks");
    const std::string csv = write_fixture_csv(dir, fixtures::uci_linear_acc);
    rank_report(csv, dir.file("report"));

    const auto stats = parse_stats(dir.file("report/stats.txt"));
    const double expected[6] = {4.4655, 3.5690, 3.4483, 3.4655, 3.0517, 3.0};
    for (int j = 0; j < 6; ++j) {
        const auto it = stats.find("avg_rank m" + std::to_string(j + 1));
        REQUIRE(it != stats.end());
        CHECK(it->second == doctest::Approx(expected[j]).epsilon(0.01));
    }
    CHECK(stats.at("chi2_f") == doctest::Approx(11.532).epsilon(1e-3));
    CHECK(stats.at("f_f") == doctest::Approx(2.4193).epsilon(1e-3));
    CHECK(stats.at("cd_0.10") == doctest::Approx(1.2720).epsilon(1e-3));

    // ranks.csv reproduces the printed rank rows.
    std::ifstream ranks(dir.file("report/ranks.csv"));
    std::string line;
    std::getline(ranks, line);
    CHECK(line == "dataset,m1,m2,m3,m4,m5,m6");
    for (int i = 0; i < 29; ++i) {
        REQUIRE(std::getline(ranks, line));
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        CHECK(cell == "d" + std::to_string(i + 1));
        for (int j = 0; j < 6; ++j) {
            REQUIRE(std::getline(ls, cell, ','));
            CHECK(std::stod(cell) == doctest::Approx(fixtures::uci_linear_ranks[i][j]));
        }
    }
    REQUIRE(std::getline(ranks, line));
    CHECK(line.rfind("avg_rank,", 0) == 0);
}

TEST_CASE("published imbalanced-suite scores reproduce their critical difference") {
    TempDir dir("fixture_cd");
    const std::string csv = write_fixture_csv(dir, fixtures::imbalanced_auc);
    rank_report(csv, dir.file("report"));
    const auto stats = parse_stats(dir.file("report/stats.txt"));
    CHECK(stats.at("chi2_f") == doctest::Approx(34.7403).epsilon(1e-3));
    CHECK(stats.at("f_f") == doctest::Approx(9.6937).epsilon(1e-3));
    CHECK(stats.at("cd_0.10") == doctest::Approx(1.4604).epsilon(1e-3));

    const std::string cd = read_file(dir.file("report/cd.csv"));
    CHECK(cd.rfind("algorithm,avg_rank,cd\n", 0) == 0);
    CHECK(cd.find("1.46039") != std::string::npos);
}

TEST_CASE("rank_report input validation") {
    TempDir dir("rank_bad");
    {
        std::ofstream out(dir.file("one_model.csv"));
        out << "dataset,model,auc\nd1,only,90\nd2,only,80\n";
    }
    CHECK_THROWS_AS(rank_report(dir.file("one_model.csv"), dir.file("r1")), ContractError);

    {
        std::ofstream out(dir.file("no_auc.csv"));
        out << "dataset,model,score\nd1,a,1\nd1,b,2\n";
    }
    CHECK_THROWS_AS(rank_report(dir.file("no_auc.csv"), dir.file("r2")), ParseError);

    {
        std::ofstream out(dir.file("bad_cell.csv"));
        out << "dataset,model,auc\nd1,a,90\nd1,b,banana\n";
    }
    try {
        rank_report(dir.file("bad_cell.csv"), dir.file("r3"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    {
        std::ofstream out(dir.file("ragged.csv"));
        out << "dataset,model,auc\nd1,a,90\nd1,b\n";
    }
    try {
        rank_report(dir.file("ragged.csv"), dir.file("r4"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(rank_report(dir.file("missing.csv"), dir.file("r5")), IoError);
}

TEST_CASE("per-row failures land in the error column and skip ranking") {
    TempDir dir("row_errors");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=3,neg=30,noise=0,seed=1\n"  // 3 < 5 folds
        "models = lstsvm, elstsvm\n"
        "folds = 5\n"
        "c12_grid = 1\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    const RunSummary s = run_experiment(cfg);
    CHECK(s.rows == 2);
    CHECK(s.failures == 2);
    CHECK(!s.note.empty());
    const std::string csv = read_file(s.results_path);
    CHECK(csv.find("fewer than 5 folds") != std::string::npos);
}

TEST_CASE("holdout protocol scores on a held-out stratified split") {
    TempDir dir("holdout");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=40,neg=40,noise=0,seed=21\n"
        "models = lstsvm\n"
        "kernel = linear\n"
        "protocol = holdout\n"
        "train_fraction = 0.6\n"
        "folds = 3\n"
        "c12_grid = 0.001\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    const RunSummary s = run_experiment(cfg);
    CHECK(s.failures == 0);
    CHECK(read_file(s.results_path).find(",100,") != std::string::npos);
}

TEST_CASE("saved models reload and predict") {
    TempDir dir("save_models");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=15,neg=15,noise=0,seed=2\n"
        "models = lstsvm\n"
        "folds = 3\n"
        "c12_grid = 1\n"
        "save_models = true\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    run_experiment(cfg);
    const std::string path = dir.file("out/models/linear_crossplane30_lstsvm.txt");
    CHECK(std::filesystem::exists(path));
    const TwinModel m = load_model(path);
    CHECK(m.w1.size() == 2);
}

TEST_CASE("energy sweep writes one surface row per grid pair") {
    TempDir dir("sweep");
    ExperimentConfig cfg = config_from(
        "datasets = crossplane:pos=20,neg=20,noise=0.1,seed=6\n"
        "models = elstsvm\n"
        "folds = 4\n"
        "c12_grid = 1\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    const std::vector<double> e_grid{0.6, 0.7, 0.8, 0.9, 1.0};
    sweep_energy(cfg, ModelId::elstsvm, e_grid, e_grid);

    const std::string csv = read_file(dir.file("out/energy_surface.csv"));
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "e1,e2,auc");
    int rows = 0;
    double first_e1 = -1.0;
    while (std::getline(lines, line)) {
        if (rows == 0) first_e1 = std::stod(line.substr(0, line.find(',')));
        ++rows;
    }
    CHECK(rows == 25);
    CHECK(first_e1 == doctest::Approx(0.6));  // e1 iterates in the outer loop

    CHECK_THROWS_AS(sweep_energy(cfg, ModelId::lstsvm, e_grid, e_grid), ContractError);
    CHECK_THROWS_AS(sweep_energy(cfg, ModelId::elstsvm, {}, e_grid), ContractError);
    CHECK_THROWS_AS(sweep_energy(cfg, ModelId::elstsvm, {1.5}, e_grid), ContractError);
}

TEST_CASE("label-free data keeps the sweep near chance level") {
    TempDir dir("nosignal");
    // Features drawn independently of the label: no energy setting should be
    // able to move the surface far from 50%.
    {
        std::ofstream out(dir.file("noise.csv"));
        std::mt19937 rng(77);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 48; ++i)
            out << u(rng) << ',' << u(rng) << ',' << (i % 2 == 0 ? 1 : -1) << '\n';
    }
    ExperimentConfig cfg = config_from(
        "datasets = " + dir.file("noise.csv") + "\n"
        "models = elstsvm\n"
        "folds = 4\n"
        "c12_grid = 1\n"
        "timing = off\n");
    cfg.output_dir = dir.file("out");
    sweep_energy(cfg, ModelId::elstsvm, {0.7, 1.0}, {0.7, 1.0});
    const std::string csv = read_file(dir.file("out/energy_surface.csv"));
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        const double auc_pct = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(auc_pct >= 15.0);
        CHECK(auc_pct <= 85.0);
    }
}

TEST_CASE("number formatting uses six significant digits") {
    CHECK(format_number(100.0) == "100");
    CHECK(format_number(0.123456789) == "0.123457");
    CHECK(format_number(1234567.0) == "1.23457e+06");
    CHECK(format_number(1e-5) == "1e-05");
    CHECK(format_number(-2.5) == "-2.5");
}

}  // TEST_SUITE
