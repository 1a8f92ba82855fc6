#ifndef PHASEID_EXPERIMENT_HPP
#define PHASEID_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "phaseid/inference.hpp"
#include "phaseid/simulator.hpp"

namespace phaseid {

struct ExperimentConfig {
  int trials = 100;
  std::vector<double> n_multipliers = {1.0, 2.0, 3.0, 4.0};
  std::vector<RealRange> loss_regimes = {{0.02, 0.05}, {0.05, 0.10}};
  std::uint64_t base_seed = 1;
  Mode mode = Mode::noisy;
  SimulationConfig base_sim;      // loss_range, n_multiplier, seed overridden
  NoiseModelConfig noise_model;   // used by the noisy inference path
};

struct TrialRecord {
  int trial = 0;
  int n = 0;      // meters
  int n_i = 0;    // consumers
  int samples = 0;
  bool success = false;
  bool errored = false;
  double seconds = 0.0;  // infer_phases only
  std::string error;
};

struct CellResult {
  RealRange loss_regime;
  double n_multiplier = 0.0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  double mean_wall_time = 0.0;
  std::vector<std::pair<int, double>> wall_time_by_node_count;  // sorted
  std::vector<TrialRecord> trial_log;  // by trial index
};

struct ExperimentResult {
  std::vector<CellResult> cells;
};

void check(const ExperimentConfig& cfg);

/// For every (loss regime, multiplier) cell, run `trials` simulate-then-infer
/// cycles with seeds base_seed + trial. A trial succeeds when the inferred
/// assignment equals the generating one exactly; a trial that throws counts
/// as a failure and keeps the message. Wall time covers inference only,
/// measured on a monotonic clock. Trials run in parallel; aggregation is
/// order-independent.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Per-cell success table (one row per cell).
void write_experiment_csv(const ExperimentResult& result, const std::string& path);

/// Long-format per-trial table (node count vs seconds, per cell).
void write_timing_csv(const ExperimentResult& result, const std::string& path);

std::string experiment_table(const ExperimentResult& result);  // for stdout

}  // namespace phaseid

#endif
