#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twinsvm/dataset.hpp"
#include "twinsvm/evaluation.hpp"

namespace twinsvm {

enum class KernelChoice { linear, gaussian, both };

// How the reported score is obtained: mean validation AUC of the tuning CV
// itself, or AUC on a held-out stratified test split (tuning on the rest).
enum class Protocol { cv_mean, holdout };

struct ExperimentConfig {
    std::vector<std::string> datasets;  // file paths or crossplane generator specs
    std::vector<ModelId> models;
    KernelChoice kernel = KernelChoice::linear;
    ParamGrids grids = ParamGrids::defaults();
    int folds = 5;
    std::uint64_t seed = 13;
    std::string output_dir = "out";
    MembershipSettings membership;
    Protocol protocol = Protocol::cv_mean;
    double train_fraction = 0.6;  // holdout protocol only
    bool normalize = false;       // columnwise min-max scaling after loading
    bool timing = true;           // write train_seconds (disable for byte-identical reruns)
    bool save_models = false;     // serialize the final model per row
    int workers = 0;              // OpenMP thread cap; 0 = config/env untouched
};

// Flat key = value format, '#' comments; unknown keys are rejected. See the
// README for the key list. `origin` names the source in error messages.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(std::istream& in, const std::string& origin);

// A dataset reference is either a path (.dat loads as KEEL, anything else as
// headerless CSV) or a generator spec "crossplane:pos=75,neg=75,noise=0,seed=7"
// (all fields optional; the seed defaults to `seed`).
Dataset resolve_dataset(const std::string& ref, std::uint64_t seed, bool normalize);

struct RunSummary {
    int rows = 0;
    int failures = 0;
    std::string results_path;
    std::string note;  // set when ranking/stats had to be skipped
};

// Trains and scores every dataset x model x kernel-family combination, then
// writes results.csv plus (when at least two models completed) the ranking
// outputs of rank_report. Per-row failures are recorded in the CSV's error
// column rather than aborting the run.
RunSummary run_experiment(const ExperimentConfig& cfg);

// Energy-sensitivity surface: for every (e1, e2) pair of the given grids,
// tunes the remaining parameters by CV and writes an (e1, e2, auc) row.
// One energy_surface CSV per dataset in the config.
void sweep_energy(const ExperimentConfig& cfg, ModelId model,
                  const std::vector<double>& e1_grid,
                  const std::vector<double>& e2_grid);

// Recomputes rank tables, the rank-based chi-squared test, and critical
// differences from a results CSV alone (columns dataset, model, auc, and
// optionally kernel to group by family). Writes ranks/stats/cd files into
// output_dir, suffixed by kernel family when the CSV mixes several.
void rank_report(const std::string& results_csv, const std::string& output_dir);

// Numeric formatting used in every generated file: 6 significant digits.
std::string format_number(double v);

}  // namespace twinsvm
