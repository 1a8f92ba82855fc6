#ifndef PHASEID_INFERENCE_HPP
#define PHASEID_INFERENCE_HPP

#include <string>
#include <vector>

#include "phaseid/measurements.hpp"
#include "phaseid/preprocess.hpp"
#include "phaseid/subspace.hpp"
#include "phaseid/topology.hpp"

namespace phaseid {

enum class Mode { noiseless, noisy };

std::string to_string(Mode m);

/// 3 x n basis of the relations the data satisfies. Columns follow the row
/// order of the data matrix, so columns 0..2 belong to the phase meters.
struct ConstraintMatrix {
  Eigen::Matrix<double, 3, Eigen::Dynamic> rows;
};

/// 3 x n_i matrix regressing phase readings on consumer readings; on exact
/// conservation data it equals the connectivity matrix.
struct RegressionMatrix {
  Eigen::Matrix<double, 3, Eigen::Dynamic> values;
};

struct RegressionOutput {
  RegressionMatrix regression;
  double condition_number;  // of the dependent column block
};

struct RoundingResult {
  ConnectivityMatrix connectivity;
  Eigen::VectorXd margins;             // winner-to-runner-up gap, per consumer
  std::vector<int> ambiguous_columns;  // margin below tie tolerance
};

struct InferenceReport {
  PhaseAssignment assignment;
  RegressionMatrix regression;
  Eigen::VectorXd margins;
  double condition_number_Cd = 0.0;
  Mode mode = Mode::noiseless;
  std::vector<std::string> warnings;
};

/// Constraint matrix for exact data: the three smallest left singular vectors
/// of Z, transposed. Throws InsufficientSamples when N < n_i and
/// RankDeficientData when the consumer block is rank deficient.
ConstraintMatrix constraint_matrix_noiseless(const MeasurementMatrix& z);

/// Constraint matrix for noisy, loss-corrected data: scale rows by error
/// standard deviations, take the three smallest left singular vectors of the
/// scaled matrix, and undo the scaling on the way out.
ConstraintMatrix constraint_matrix_noisy(const MeasurementMatrix& z,
                                         const NoiseModelConfig& cfg);

/// Noisy-path core with an explicit scaling, for callers that build their
/// own; constraint_matrix_noisy delegates here. The result is invariant to
/// multiplying all standard deviations by a common factor.
ConstraintMatrix constraint_matrix_scaled(const MeasurementMatrix& z,
                                          const DiagonalScaling& scaling);

/// R = -Cd^-1 * Ci with Cd the phase-meter columns. Throws
/// SingularDependentBlock when cond(Cd) exceeds 1e12.
RegressionOutput regression_matrix(const ConstraintMatrix& c);

inline constexpr double kConditionLimit = 1e12;
inline constexpr double kTieTolerance = 1e-9;

/// Per column, the entry closest to 1 becomes 1 and the rest 0. Ties go to
/// the lowest row (phase A first) and are reported as ambiguous.
RoundingResult round_to_connectivity(const RegressionMatrix& r);

/// The whole pipeline. Noisy mode removes losses and scales; noiseless mode
/// feeds the data straight to the subspace step. The mode is explicit so the
/// caller always knows which algorithm ran.
InferenceReport infer_phases(const MeasurementMatrix& z, Mode mode,
                             const NoiseModelConfig& cfg = NoiseModelConfig{});

}  // namespace phaseid

#endif
