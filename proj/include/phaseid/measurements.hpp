#ifndef PHASEID_MEASUREMENTS_HPP
#define PHASEID_MEASUREMENTS_HPP

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "phaseid/errors.hpp"

namespace phaseid {

/// Number of dependent (phase-meter) rows; the transformer meter counts as
/// three single-phase meters.
inline constexpr int kDependentRows = 3;

/// Interval energy readings in Wh. Rows 0..2 are the phase meters in order
/// A, B, C; the remaining rows are consumers. Columns are time intervals.
struct MeasurementMatrix {
  Eigen::MatrixXd values;
  int interval_minutes = 15;

  MeasurementMatrix() = default;
  MeasurementMatrix(Eigen::MatrixXd v, int interval_min = 15)
      : values(std::move(v)), interval_minutes(interval_min) {
    if (values.rows() < kDependentRows)
      throw MalformedMatrix("measurement matrix needs at least " +
                            std::to_string(kDependentRows) + " rows, got " +
                            std::to_string(values.rows()));
  }

  int meter_count() const { return static_cast<int>(values.rows()); }
  int consumer_count() const { return meter_count() - kDependentRows; }
  int sample_count() const { return static_cast<int>(values.cols()); }

  auto dependent_block() const { return values.topRows(kDependentRows); }
  auto independent_block() const { return values.bottomRows(consumer_count()); }
};

/// One aggregate technical-loss estimate per interval, in Wh. Entries may be
/// slightly negative on noisy data; they are flagged downstream, not clamped.
struct LossVector {
  Eigen::VectorXd loss;
};

struct ValidationReport {
  int meter_count = 0;
  int consumer_count = 0;
  int sample_count = 0;
  int consumer_rank = 0;  // 0 when entries are not finite
  std::vector<std::string> findings;

  bool ok() const { return findings.empty(); }
};

/// Pure inspection: counts, defective entries, consumer-block rank, and
/// whether enough intervals exist for a unique answer.
ValidationReport validate(const MeasurementMatrix& z);

/// Row partition into (phase rows, consumer rows); views into z, no copy.
std::pair<Eigen::Block<const Eigen::MatrixXd>, Eigen::Block<const Eigen::MatrixXd>>
split(const MeasurementMatrix& z);

}  // namespace phaseid

#endif
