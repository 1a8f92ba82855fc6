#ifndef PHASEID_SIMULATOR_HPP
#define PHASEID_SIMULATOR_HPP

#include <array>
#include <cstdint>

#include "phaseid/measurements.hpp"
#include "phaseid/rng.hpp"
#include "phaseid/topology.hpp"

namespace phaseid {

struct IntRange {
  long lo = 0;
  long hi = 0;  // inclusive
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;  // draws are uniform in [lo, hi)
};

/// Whether the loss fraction is drawn once per interval or once per run.
enum class LossDraw { per_interval, per_run };

/// Whether the relative noise level is a property of each meter or drawn
/// fresh for every reading.
enum class NoiseDraw { per_meter, per_reading };

struct SimulationConfig {
  std::uint64_t seed = 1;
  IntRange consumers_per_phase{5, 100};
  // Load classes in Wh per interval; each consumer sticks to one for the run.
  std::array<RealRange, 3> load_tiers{
      {{100.0, 500.0}, {500.0, 2000.0}, {2000.0, 5000.0}}};
  RealRange loss_range{0.02, 0.05};       // fraction of energy transmitted
  RealRange noise_std_range{0.005, 0.01};  // fraction of the reading
  double n_multiplier = 3.0;               // N = round(n_multiplier * n_i)
  LossDraw loss_draw = LossDraw::per_interval;
  NoiseDraw noise_draw = NoiseDraw::per_meter;
  int interval_minutes = 15;
  double clock_jitter_std_seconds = 0.0;
};

void check(const SimulationConfig& cfg);  // throws ConfigError

int sample_count_for(const SimulationConfig& cfg, int n_i);

/// Relative noise added on top of the drawn level when clock jitter is
/// configured: a five-fold load swing over the jitter window.
double jitter_extra_relative_std(const SimulationConfig& cfg);

/// Everything the generator knew: the assignment, exact pre-noise readings
/// (phase rows are plain consumer sums, accumulated in ascending consumer
/// order), the injected loss, and the drawn noise levels.
struct GroundTruth {
  PhaseAssignment assignment;
  MeasurementMatrix true_readings;
  LossVector injected_loss;
  Eigen::VectorXd per_interval_loss_fraction;
  Eigen::VectorXd noise_std_fractions;  // per meter; upper bound in
                                        // per-reading mode
};

struct SimulatedDataset {
  MeasurementMatrix noisy;
  GroundTruth truth;
  SimulationConfig config_echo;

  bool has_ground_truth() const { return truth.true_readings.values.size() > 0; }
};

/// Draw per-phase consumer counts, lay consumers out phase by phase, then
/// shuffle the indices.
PhaseAssignment generate_network(const SimulationConfig& cfg, Rng& rng);

/// n_i x N consumer readings; per consumer: one tier draw, then N uniform
/// readings inside that tier.
Eigen::MatrixXd generate_consumer_readings(const PhaseAssignment& a,
                                           const SimulationConfig& cfg,
                                           Rng& rng);

struct AggregateResult {
  Eigen::Matrix<double, 3, Eigen::Dynamic> dependent;  // with loss added
  Eigen::Matrix<double, 3, Eigen::Dynamic> exact_sums;  // conservation-exact
  LossVector injected_loss;
  Eigen::VectorXd fractions;  // loss fraction per interval
};

/// Phase row k at interval j is (1 + lambda_j) times the sum of its
/// consumers; injected_loss is lambda_j times the total consumer sum.
AggregateResult aggregate_with_losses(const Eigen::MatrixXd& readings,
                                      const PhaseAssignment& a,
                                      const SimulationConfig& cfg, Rng& rng);

struct NoiseResult {
  MeasurementMatrix noisy;
  Eigen::VectorXd std_fractions;  // per meter
};

/// Replace every entry with a gaussian draw centered on it. Per meter: one
/// level draw, then N gaussians (per-reading mode interleaves a level draw
/// before each gaussian).
NoiseResult add_measurement_noise(const MeasurementMatrix& z,
                                  const SimulationConfig& cfg, Rng& rng);

/// The full protocol on independent substreams of cfg.seed; a pure function
/// of the config.
SimulatedDataset simulate(const SimulationConfig& cfg);

}  // namespace phaseid

#endif
