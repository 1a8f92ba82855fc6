#include "phaseid/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "phaseid/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phaseid {

void check(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.n_multipliers.empty()) throw ConfigError("need at least one sample multiplier");
  for (double m : cfg.n_multipliers)
    if (m < 1.0) throw ConfigError("sample multipliers must be at least 1");
  if (cfg.loss_regimes.empty()) throw ConfigError("need at least one loss regime");
  SimulationConfig probe = cfg.base_sim;
  for (const RealRange& r : cfg.loss_regimes) {
    probe.loss_range = r;
    check(probe);
  }
  check(cfg.noise_model);
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, const RealRange& regime,
                      double multiplier, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  SimulationConfig sim = cfg.base_sim;
  sim.loss_range = regime;
  sim.n_multiplier = multiplier;
  sim.seed = cfg.base_seed + static_cast<std::uint64_t>(trial);
  try {
    SimulatedDataset data = simulate(sim);
    rec.n = data.noisy.meter_count();
    rec.n_i = data.noisy.consumer_count();
    rec.samples = data.noisy.sample_count();
    NoiseModelConfig noise = cfg.noise_model;
    noise.interval_minutes = sim.interval_minutes;
    noise.clock_jitter_std_seconds = sim.clock_jitter_std_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    InferenceReport report = infer_phases(data.noisy, cfg.mode, noise);
    const auto t1 = std::chrono::steady_clock::now();
    rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    rec.success = (report.assignment == data.truth.assignment);
  } catch (const Error& e) {
    rec.errored = true;
    rec.error = e.what();
  }
  return rec;
}

CellResult summarize(const RealRange& regime, double multiplier,
                     std::vector<TrialRecord> log) {
  CellResult cell;
  cell.loss_regime = regime;
  cell.n_multiplier = multiplier;
  cell.trials = static_cast<int>(log.size());
  double time_sum = 0.0;
  std::map<int, std::pair<double, int>> by_n;  // n -> (sum seconds, count)
  for (const TrialRecord& rec : log) {
    if (rec.success) ++cell.successes;
    time_sum += rec.seconds;
    if (!rec.errored) {
      auto& acc = by_n[rec.n];
      acc.first += rec.seconds;
      acc.second += 1;
    }
  }
  cell.success_rate =
      cell.trials > 0 ? static_cast<double>(cell.successes) / cell.trials : 0.0;
  cell.mean_wall_time = cell.trials > 0 ? time_sum / cell.trials : 0.0;
  for (const auto& [n, acc] : by_n)
    cell.wall_time_by_node_count.emplace_back(n, acc.first / acc.second);
  cell.trial_log = std::move(log);
  return cell;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  check(cfg);
  ExperimentResult result;
  for (const RealRange& regime : cfg.loss_regimes) {
    for (double multiplier : cfg.n_multipliers) {
      std::vector<TrialRecord> log(static_cast<std::size_t>(cfg.trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int trial = 0; trial < cfg.trials; ++trial)
        log[static_cast<std::size_t>(trial)] =
            run_trial(cfg, regime, multiplier, trial);
      result.cells.push_back(summarize(regime, multiplier, std::move(log)));
    }
  }
  return result;
}

void write_experiment_csv(const ExperimentResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << "loss_lo,loss_hi,n_multiplier,trials,successes,success_rate,mean_infer_seconds\n";
  char buf[256];
  for (const CellResult& cell : result.cells) {
    std::snprintf(buf, sizeof buf, "%.4f,%.4f,%g,%d,%d,%.4f,%.6f\n",
                  cell.loss_regime.lo, cell.loss_regime.hi, cell.n_multiplier,
                  cell.trials, cell.successes, cell.success_rate,
                  cell.mean_wall_time);
    out << buf;
  }
}

void write_timing_csv(const ExperimentResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << "loss_lo,loss_hi,n_multiplier,trial,n,n_i,samples,success,infer_seconds\n";
  char buf[256];
  for (const CellResult& cell : result.cells) {
    for (const TrialRecord& rec : cell.trial_log) {
      if (rec.errored) continue;
      std::snprintf(buf, sizeof buf, "%.4f,%.4f,%g,%d,%d,%d,%d,%d,%.6f\n",
                    cell.loss_regime.lo, cell.loss_regime.hi, cell.n_multiplier,
                    rec.trial, rec.n, rec.n_i, rec.samples,
                    rec.success ? 1 : 0, rec.seconds);
      out << buf;
    }
  }
}

std::string experiment_table(const ExperimentResult& result) {
  std::ostringstream out;
  out << "loss regime     mult   trials  success rate  mean infer s\n";
  char buf[128];
  for (const CellResult& cell : result.cells) {
    std::snprintf(buf, sizeof buf, "[%.2f, %.2f]    %-5g  %-6d  %11.1f%%  %12.6f\n",
                  cell.loss_regime.lo, cell.loss_regime.hi, cell.n_multiplier,
                  cell.trials, 100.0 * cell.success_rate, cell.mean_wall_time);
    out << buf;
  }
  return out.str();
}

}  // namespace phaseid
