#include "phaseid/simulator.hpp"

#include <cmath>

namespace phaseid {

void check(const SimulationConfig& cfg) {
  if (cfg.consumers_per_phase.lo < 1 ||
      cfg.consumers_per_phase.hi < cfg.consumers_per_phase.lo)
    throw ConfigError("consumers_per_phase must satisfy 1 <= lo <= hi");
  for (const RealRange& tier : cfg.load_tiers)
    if (!(tier.lo > 0.0) || tier.hi < tier.lo)
      throw ConfigError("load tiers must satisfy 0 < lo <= hi");
  if (cfg.loss_range.lo < 0.0 || cfg.loss_range.hi < cfg.loss_range.lo ||
      cfg.loss_range.hi > 0.5)
    throw ConfigError("loss_range must lie within [0, 0.5]");
  if (cfg.noise_std_range.lo < 0.0 ||
      cfg.noise_std_range.hi < cfg.noise_std_range.lo)
    throw ConfigError("noise_std_range must satisfy 0 <= lo <= hi");
  if (!(cfg.n_multiplier > 0.0))
    throw ConfigError("n_multiplier must be positive");
  if (cfg.interval_minutes <= 0)
    throw ConfigError("interval_minutes must be positive");
  if (cfg.clock_jitter_std_seconds < 0.0)
    throw ConfigError("clock_jitter_std_seconds must be non-negative");
}

int sample_count_for(const SimulationConfig& cfg, int n_i) {
  long N = std::lround(cfg.n_multiplier * n_i);
  return static_cast<int>(N < 1 ? 1 : N);
}

double jitter_extra_relative_std(const SimulationConfig& cfg) {
  if (cfg.clock_jitter_std_seconds <= 0.0) return 0.0;
  return 5.0 * cfg.clock_jitter_std_seconds / (cfg.interval_minutes * 60.0);
}

PhaseAssignment generate_network(const SimulationConfig& cfg, Rng& rng) {
  check(cfg);
  std::vector<Phase> phases;
  for (int p = 0; p < kPhaseCount; ++p) {
    auto count = rng.uniform_int(
        static_cast<std::uint64_t>(cfg.consumers_per_phase.lo),
        static_cast<std::uint64_t>(cfg.consumers_per_phase.hi));
    phases.insert(phases.end(), count, static_cast<Phase>(p));
  }
  shuffle(phases, rng);
  return PhaseAssignment(std::move(phases));
}

Eigen::MatrixXd generate_consumer_readings(const PhaseAssignment& a,
                                           const SimulationConfig& cfg,
                                           Rng& rng) {
  const int n_i = a.consumer_count();
  const int N = sample_count_for(cfg, n_i);
  Eigen::MatrixXd readings(n_i, N);
  for (int c = 0; c < n_i; ++c) {
    const RealRange& tier =
        cfg.load_tiers[static_cast<std::size_t>(rng.uniform_int(0, 2))];
    for (int j = 0; j < N; ++j)
      readings(c, j) = rng.uniform(tier.lo, tier.hi);
  }
  return readings;
}

AggregateResult aggregate_with_losses(const Eigen::MatrixXd& readings,
                                      const PhaseAssignment& a,
                                      const SimulationConfig& cfg, Rng& rng) {
  const int n_i = static_cast<int>(readings.rows());
  const int N = static_cast<int>(readings.cols());

  AggregateResult out;
  out.dependent.setZero(3, N);
  out.exact_sums.setZero(3, N);
  out.injected_loss.loss.resize(N);
  out.fractions.resize(N);

  double run_fraction = rng.uniform(cfg.loss_range.lo, cfg.loss_range.hi);
  for (int j = 0; j < N; ++j) {
    double lambda = cfg.loss_draw == LossDraw::per_run
                        ? run_fraction
                        : rng.uniform(cfg.loss_range.lo, cfg.loss_range.hi);
    // Ascending consumer order keeps the sums reproducible bit for bit.
    for (int c = 0; c < n_i; ++c)
      out.exact_sums(static_cast<int>(a.phase_of(c)), j) += readings(c, j);
    double total = 0.0;
    for (int p = 0; p < 3; ++p) {
      out.dependent(p, j) = (1.0 + lambda) * out.exact_sums(p, j);
      total += out.exact_sums(p, j);
    }
    out.injected_loss.loss(j) = lambda * total;
    out.fractions(j) = lambda;
  }
  return out;
}

NoiseResult add_measurement_noise(const MeasurementMatrix& z,
                                  const SimulationConfig& cfg, Rng& rng) {
  const int n = z.meter_count();
  const int N = z.sample_count();
  const double extra = jitter_extra_relative_std(cfg);

  NoiseResult out;
  out.noisy = z;
  out.std_fractions.resize(n);
  for (int i = 0; i < n; ++i) {
    if (cfg.noise_draw == NoiseDraw::per_meter) {
      double level =
          rng.uniform(cfg.noise_std_range.lo, cfg.noise_std_range.hi) + extra;
      out.std_fractions(i) = level;
      for (int j = 0; j < N; ++j) {
        double v = z.values(i, j);
        out.noisy.values(i, j) = rng.gaussian(v, level * v);
      }
    } else {
      out.std_fractions(i) = cfg.noise_std_range.hi + extra;  // upper bound
      for (int j = 0; j < N; ++j) {
        double level =
            rng.uniform(cfg.noise_std_range.lo, cfg.noise_std_range.hi) + extra;
        double v = z.values(i, j);
        out.noisy.values(i, j) = rng.gaussian(v, level * v);
      }
    }
  }
  return out;
}

SimulatedDataset simulate(const SimulationConfig& cfg) {
  check(cfg);
  Rng network_rng(stream_seed(cfg.seed, 0));
  Rng load_rng(stream_seed(cfg.seed, 1));
  Rng loss_rng(stream_seed(cfg.seed, 2));
  Rng noise_rng(stream_seed(cfg.seed, 3));

  PhaseAssignment assignment = generate_network(cfg, network_rng);
  Eigen::MatrixXd readings =
      generate_consumer_readings(assignment, cfg, load_rng);
  AggregateResult agg =
      aggregate_with_losses(readings, assignment, cfg, loss_rng);

  const int n = kDependentRows + assignment.consumer_count();
  const int N = static_cast<int>(readings.cols());

  Eigen::MatrixXd true_values(n, N);
  true_values.topRows(kDependentRows) = agg.exact_sums;
  true_values.bottomRows(assignment.consumer_count()) = readings;

  Eigen::MatrixXd lossy_values(n, N);
  lossy_values.topRows(kDependentRows) = agg.dependent;
  lossy_values.bottomRows(assignment.consumer_count()) = readings;

  NoiseResult noised = add_measurement_noise(
      MeasurementMatrix(std::move(lossy_values), cfg.interval_minutes), cfg,
      noise_rng);

  SimulatedDataset out;
  out.noisy = std::move(noised.noisy);
  out.truth.assignment = std::move(assignment);
  out.truth.true_readings =
      MeasurementMatrix(std::move(true_values), cfg.interval_minutes);
  out.truth.injected_loss = std::move(agg.injected_loss);
  out.truth.per_interval_loss_fraction = std::move(agg.fractions);
  out.truth.noise_std_fractions = std::move(noised.std_fractions);
  out.config_echo = cfg;
  return out;
}

}  // namespace phaseid
