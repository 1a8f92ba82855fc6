#include "phaseid/preprocess.hpp"

#include "phaseid/kernels.hpp"

namespace phaseid {

void check(const NoiseModelConfig& cfg) {
  if (!(cfg.relative_std > 0.0 && cfg.relative_std <= 0.05))
    throw ConfigError("relative_std must lie in (0, 0.05], got " +
                      std::to_string(cfg.relative_std));
  if (cfg.interval_minutes <= 0)
    throw ConfigError("interval_minutes must be positive");
  if (cfg.clock_jitter_std_seconds < 0.0)
    throw ConfigError("clock_jitter_std_seconds must be non-negative");
}

LossVector estimate_losses(const MeasurementMatrix& z) {
  Eigen::VectorXd dep = z.dependent_block().colwise().sum();
  Eigen::VectorXd indep =
      z.consumer_count() > 0
          ? Eigen::VectorXd(z.independent_block().colwise().sum())
          : Eigen::VectorXd::Zero(z.sample_count());
  return LossVector{dep - indep};
}

MeasurementMatrix remove_losses(const MeasurementMatrix& z,
                                const LossVector& loss) {
  if (loss.loss.size() != z.sample_count())
    throw MalformedMatrix("loss vector length " +
                          std::to_string(loss.loss.size()) +
                          " does not match interval count " +
                          std::to_string(z.sample_count()));

  MeasurementMatrix out = z;
  for (int j = 0; j < z.sample_count(); ++j) {
    double total = 0.0;
    for (int r = 0; r < kDependentRows; ++r) total += z.values(r, j);
    if (!(total > 0.0))
      throw ZeroPhaseTotal("phase-meter sum is " + std::to_string(total) +
                           " at interval " + std::to_string(j));
    for (int r = 0; r < kDependentRows; ++r)
      out.values(r, j) = z.values(r, j) - loss.loss(j) * z.values(r, j) / total;
  }
  return out;
}

DiagonalScaling build_error_scaling(const MeasurementMatrix& z,
                                    const NoiseModelConfig& cfg) {
  check(cfg);
  if (z.sample_count() < 1) throw ZeroMeanRow("matrix has no intervals");

  Eigen::VectorXd means =
      z.values.rowwise().sum() / static_cast<double>(z.sample_count());
  for (Eigen::Index i = 0; i < means.size(); ++i)
    if (!(means(i) > 0.0))
      throw ZeroMeanRow("row " + std::to_string(i) + " has mean " +
                        std::to_string(means(i)));

  if (cfg.scaling == ScalingVariant::sqrt_mean)
    return cholesky_diagonal(means);
  return DiagonalScaling{cfg.relative_std * means};
}

MeasurementMatrix scale_data(const MeasurementMatrix& z,
                             const DiagonalScaling& l) {
  if (l.std_devs.size() != z.meter_count())
    throw MalformedMatrix("scaling length " + std::to_string(l.std_devs.size()) +
                          " does not match meter count " +
                          std::to_string(z.meter_count()));
  return MeasurementMatrix(kernels::scale_rows(z.values, l.std_devs),
                           z.interval_minutes);
}

}  // namespace phaseid
