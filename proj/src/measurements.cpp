#include "phaseid/measurements.hpp"

#include <Eigen/QR>
#include <cmath>

namespace phaseid {

ValidationReport validate(const MeasurementMatrix& z) {
  ValidationReport report;
  report.meter_count = z.meter_count();
  report.consumer_count = z.consumer_count();
  report.sample_count = z.sample_count();

  bool finite = true;
  for (int j = 0; j < z.values.cols(); ++j) {
    for (int i = 0; i < z.values.rows(); ++i) {
      double v = z.values(i, j);
      if (!std::isfinite(v)) {
        report.findings.push_back("non-finite entry at (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")");
        finite = false;
      } else if (v < 0.0) {
        report.findings.push_back("negative entry at (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")");
      }
    }
  }

  if (finite && z.consumer_count() > 0 && z.sample_count() > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(z.independent_block());
    report.consumer_rank = static_cast<int>(qr.rank());
    if (report.consumer_rank < z.consumer_count())
      report.findings.push_back(
          "consumer block rank " + std::to_string(report.consumer_rank) +
          " < n_i = " + std::to_string(z.consumer_count()) +
          ": readings are linearly dependent");
  }

  if (z.sample_count() < z.consumer_count())
    report.findings.push_back(
        "N = " + std::to_string(z.sample_count()) +
        " < n_i = " + std::to_string(z.consumer_count()) +
        ": too few intervals to determine connectivity uniquely");

  return report;
}

std::pair<Eigen::Block<const Eigen::MatrixXd>, Eigen::Block<const Eigen::MatrixXd>>
split(const MeasurementMatrix& z) {
  return {z.values.topRows(kDependentRows),
          z.values.bottomRows(z.consumer_count())};
}

}  // namespace phaseid
