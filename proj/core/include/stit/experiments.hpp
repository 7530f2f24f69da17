#ifndef STIT_EXPERIMENTS_HPP
#define STIT_EXPERIMENTS_HPP

#include <string>

#include "json.hpp"
#include "stit/config.hpp"
#include "stit/stats.hpp"

namespace stit {

inline constexpr int kResultSchemaVersion = 1;

// result document; everything outside "run_info" is a pure function of the
// config and master seed, independent of the worker count
struct ExperimentResult {
    nlohmann::json data;
    bool passed = false;
};

ExperimentResult exp_mean_surface(const ExperimentConfig& cfg);
ExperimentResult exp_variance_exact(const ExperimentConfig& cfg);
ExperimentResult exp_martingale(const ExperimentConfig& cfg);
ExperimentResult exp_increment_clt(const ExperimentConfig& cfg);
ExperimentResult exp_total_length_2d(const ExperimentConfig& cfg);
ExperimentResult exp_non_gaussian(const ExperimentConfig& cfg);
ExperimentResult exp_scaling(const ExperimentConfig& cfg);

// dispatch on cfg.name
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// writes result.json (plus samples.csv when dump_csv) into cfg.out_dir
void write_result(const ExperimentResult& result, const ExperimentConfig& cfg);

nlohmann::json summary_to_json(const MomentAccumulator::Summary& s);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace stit

#endif
