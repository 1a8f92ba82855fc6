#ifndef PHASEID_SUBSPACE_HPP
#define PHASEID_SUBSPACE_HPP

#include <Eigen/Core>

#include "phaseid/measurements.hpp"

namespace phaseid {

/// Full left factor, thin right factor. Singular values are non-increasing;
/// when n > N the left vectors beyond column N span the cokernel and belong
/// to singular value zero.
struct SvdResult {
  Eigen::MatrixXd left_vectors;     // n x n, orthonormal columns
  Eigen::VectorXd singular_values;  // min(n, N)
  Eigen::MatrixXd right_vectors;    // N x min(n, N), orthonormal columns
};

/// Uncentered covariance Z * Z^T. The conservation relations are homogeneous,
/// so no mean is subtracted and no 1/N factor is applied.
Eigen::MatrixXd covariance(const MeasurementMatrix& z);

/// Deterministic full SVD. Sign convention: the first nonzero component of
/// each left vector is non-negative. Throws NumericalFailure on non-finite
/// input or failed convergence.
SvdResult svd(const Eigen::MatrixXd& z);

/// The m left singular vectors of smallest singular values, transposed
/// (m x n, orthonormal rows). Throws DegenerateGap when the m-th and
/// (m+1)-th smallest singular values coincide within relative 1e-12, in
/// which case the subspace is not unique.
Eigen::MatrixXd smallest_subspace(const SvdResult& s, int m);

inline constexpr double kDegenerateGapTol = 1e-12;

/// Diagonal of the Cholesky factor of a diagonal error covariance: the error
/// standard deviation of each row.
struct DiagonalScaling {
  Eigen::VectorXd std_devs;
};

/// std_devs[i] = sqrt(variances[i]); throws NonPositiveVariance.
DiagonalScaling cholesky_diagonal(const Eigen::VectorXd& variances);

}  // namespace phaseid

#endif
