#include "phaseid/subspace.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "phaseid/kernels.hpp"

namespace phaseid {

Eigen::MatrixXd covariance(const MeasurementMatrix& z) {
  return kernels::gram(z.values);
}

SvdResult svd(const Eigen::MatrixXd& z) {
  if (z.rows() < 1 || z.cols() < 1)
    throw NumericalFailure("svd of an empty matrix");
  if (!z.allFinite()) throw NumericalFailure("svd input has non-finite entries");

  Eigen::BDCSVD<Eigen::MatrixXd> dec(z, Eigen::ComputeFullU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw NumericalFailure("singular value decomposition did not converge");

  SvdResult out;
  out.left_vectors = dec.matrixU();
  out.singular_values = dec.singularValues();
  out.right_vectors = dec.matrixV();

  // Fix signs: first nonzero component of each left vector non-negative.
  // Paired right vectors flip with their left vector to keep U S V^T intact.
  const Eigen::Index k = out.singular_values.size();
  for (Eigen::Index j = 0; j < out.left_vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.left_vectors.rows(); ++i) {
      double v = out.left_vectors(i, j);
      if (v != 0.0) {
        if (v < 0.0) {
          out.left_vectors.col(j) = -out.left_vectors.col(j);
          if (j < k) out.right_vectors.col(j) = -out.right_vectors.col(j);
        }
        break;
      }
    }
  }
  return out;
}

Eigen::MatrixXd smallest_subspace(const SvdResult& s, int m) {
  const Eigen::Index n = s.left_vectors.rows();
  const Eigen::Index k = s.singular_values.size();
  if (m < 1 || m > n)
    throw NumericalFailure("subspace dimension " + std::to_string(m) +
                           " outside [1, " + std::to_string(n) + "]");

  // Effective spectrum over all n left vectors; columns past the value count
  // carry singular value zero.
  auto effective = [&](Eigen::Index col) {
    return col < k ? s.singular_values(col) : 0.0;
  };

  if (m < n) {
    double upper = effective(n - m - 1);  // smallest kept outside
    double lower = effective(n - m);      // largest taken inside
    if (upper - lower <= kDegenerateGapTol * upper)
      throw DegenerateGap("singular values " + std::to_string(lower) + " and " +
                          std::to_string(upper) +
                          " around the subspace boundary coincide");
  }

  Eigen::MatrixXd rows(m, n);
  for (int r = 0; r < m; ++r)
    rows.row(r) = s.left_vectors.col(n - m + r).transpose();
  return rows;
}

DiagonalScaling cholesky_diagonal(const Eigen::VectorXd& variances) {
  for (Eigen::Index i = 0; i < variances.size(); ++i)
    if (!(variances(i) > 0.0))
      throw NonPositiveVariance("variance " + std::to_string(variances(i)) +
                                " at row " + std::to_string(i));
  return DiagonalScaling{variances.array().sqrt().matrix()};
}

}  // namespace phaseid
