#ifndef PHASEID_PREPROCESS_HPP
#define PHASEID_PREPROCESS_HPP

#include "phaseid/measurements.hpp"
#include "phaseid/subspace.hpp"

namespace phaseid {

/// How the per-row error standard deviation is derived from the row mean.
///   proportional: std = relative_std * mean   (meter accuracy-class model)
///   sqrt_mean:    std = sqrt(mean)            (variance equal to the mean;
///                 kept selectable for comparison runs)
enum class ScalingVariant { proportional, sqrt_mean };

struct NoiseModelConfig {
  double relative_std = 0.01;
  int interval_minutes = 15;
  double clock_jitter_std_seconds = 0.0;  // metadata; the simulator folds it
                                          // into its noise draw, the scaling
                                          // here does not use it
  ScalingVariant scaling = ScalingVariant::proportional;
};

/// Throws ConfigError unless 0 < relative_std <= 0.05 and the metadata fields
/// are sane.
void check(const NoiseModelConfig& cfg);

/// Aggregate technical loss per interval: phase-meter sum minus consumer sum.
/// Negative entries are possible on noisy data and are kept as-is.
LossVector estimate_losses(const MeasurementMatrix& z);

/// Subtract the estimated loss from the phase-meter rows in proportion to
/// their readings; consumer rows pass through untouched. Throws
/// ZeroPhaseTotal when an interval's phase-meter sum is not positive.
MeasurementMatrix remove_losses(const MeasurementMatrix& z,
                                const LossVector& loss);

/// Per-row error standard deviations from the configured model. Row means
/// divide by N. Throws ZeroMeanRow when a row mean is not positive.
DiagonalScaling build_error_scaling(const MeasurementMatrix& z,
                                    const NoiseModelConfig& cfg);

/// Divide each row by its error standard deviation.
MeasurementMatrix scale_data(const MeasurementMatrix& z,
                             const DiagonalScaling& l);

}  // namespace phaseid

#endif
