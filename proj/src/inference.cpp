#include "phaseid/inference.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace phaseid {

std::string to_string(Mode m) {
  return m == Mode::noiseless ? "noiseless" : "noisy";
}

namespace {

void require_identifiable(const MeasurementMatrix& z) {
  const int n_i = z.consumer_count();
  const int N = z.sample_count();
  if (N < n_i)
    throw InsufficientSamples("N = " + std::to_string(N) + " intervals < n_i = " +
                              std::to_string(n_i) +
                              " consumers; connectivity is not identifiable");
  if (n_i > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(z.independent_block());
    int rank = static_cast<int>(qr.rank());
    if (rank < n_i)
      throw RankDeficientData("consumer block rank " + std::to_string(rank) +
                              " < n_i = " + std::to_string(n_i));
  }
}

}  // namespace

ConstraintMatrix constraint_matrix_noiseless(const MeasurementMatrix& z) {
  require_identifiable(z);
  SvdResult s = svd(z.values);
  ConstraintMatrix c;
  c.rows = smallest_subspace(s, kDependentRows);
  return c;
}

ConstraintMatrix constraint_matrix_scaled(const MeasurementMatrix& z,
                                          const DiagonalScaling& scaling) {
  require_identifiable(z);
  MeasurementMatrix scaled = scale_data(z, scaling);
  SvdResult s = svd(scaled.values);
  Eigen::MatrixXd u2t = smallest_subspace(s, kDependentRows);
  ConstraintMatrix c;
  c.rows = u2t * scaling.std_devs.cwiseInverse().asDiagonal();
  return c;
}

ConstraintMatrix constraint_matrix_noisy(const MeasurementMatrix& z,
                                         const NoiseModelConfig& cfg) {
  return constraint_matrix_scaled(z, build_error_scaling(z, cfg));
}

RegressionOutput regression_matrix(const ConstraintMatrix& c) {
  if (c.rows.cols() < kDependentRows)
    throw MalformedMatrix("constraint matrix has fewer than 3 columns");

  Eigen::Matrix3d cd = c.rows.leftCols<3>();
  Eigen::JacobiSVD<Eigen::Matrix3d> dec(cd,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  double smax = dec.singularValues()(0);
  double smin = dec.singularValues()(2);
  double cond = smin > 0.0 ? smax / smin
                           : std::numeric_limits<double>::infinity();
  if (!(cond <= kConditionLimit))
    throw SingularDependentBlock(
        "dependent columns of the constraint matrix are near-singular "
        "(condition number " +
        std::to_string(cond) + ")");

  RegressionOutput out;
  out.condition_number = cond;
  out.regression.values = -dec.solve(c.rows.rightCols(c.rows.cols() - 3));
  return out;
}

RoundingResult round_to_connectivity(const RegressionMatrix& r) {
  const int n_i = static_cast<int>(r.values.cols());
  RoundingResult out;
  out.connectivity.entries.setZero(3, n_i);
  out.margins.resize(n_i);

  for (int c = 0; c < n_i; ++c) {
    int winner = 0;
    double best = std::abs(r.values(0, c) - 1.0);
    double second = std::numeric_limits<double>::infinity();
    for (int p = 1; p < 3; ++p) {
      double d = std::abs(r.values(p, c) - 1.0);
      if (d < best) {
        second = best;
        best = d;
        winner = p;
      } else if (d < second) {
        second = d;
      }
    }
    out.connectivity.entries(winner, c) = 1;
    out.margins(c) = second - best;
    if (out.margins(c) < kTieTolerance) out.ambiguous_columns.push_back(c);
  }
  return out;
}

InferenceReport infer_phases(const MeasurementMatrix& z, Mode mode,
                             const NoiseModelConfig& cfg) {
  ConstraintMatrix c;
  if (mode == Mode::noisy) {
    LossVector loss = estimate_losses(z);
    MeasurementMatrix corrected = remove_losses(z, loss);
    c = constraint_matrix_noisy(corrected, cfg);
  } else {
    c = constraint_matrix_noiseless(z);
  }

  RegressionOutput reg = regression_matrix(c);
  RoundingResult rounded = round_to_connectivity(reg.regression);

  InferenceReport report;
  report.assignment = matrix_to_assignment(rounded.connectivity);
  report.regression = std::move(reg.regression);
  report.margins = std::move(rounded.margins);
  report.condition_number_Cd = reg.condition_number;
  report.mode = mode;

  for (int c_idx : rounded.ambiguous_columns)
    report.warnings.push_back("ambiguous rounding in column " +
                              std::to_string(c_idx) +
                              "; tie broken toward phase A");

  // Columns of R should sum to about 1 on data matching the noise model;
  // drift beyond 0.1 hints at model mismatch.
  for (int j = 0; j < report.regression.values.cols(); ++j) {
    double s = report.regression.values.col(j).sum();
    if (std::abs(s - 1.0) > 0.1)
      report.warnings.push_back("regression column " + std::to_string(j) +
                                " sums to " + std::to_string(s) +
                                ", expected close to 1");
  }
  return report;
}

}  // namespace phaseid
