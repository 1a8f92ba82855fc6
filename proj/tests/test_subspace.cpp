#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "phaseid/errors.hpp"
#include "phaseid/rng.hpp"
#include "phaseid/subspace.hpp"

using namespace phaseid;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(0.5, 4.0);
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("subspace");

TEST_CASE("covariance is the uncentered gram matrix") {
  Eigen::MatrixXd v(3, 2);
  v << 1, 0,
       0, 1,
       1, 1;
  const MeasurementMatrix z(v);
  Eigen::MatrixXd expected(3, 3);
  expected << 1, 0, 1,
              0, 1, 1,
              1, 1, 2;
  CHECK(covariance(z) == expected);

  const Eigen::MatrixXd big = random_matrix(6, 11, 5);
  const Eigen::MatrixXd s = covariance(MeasurementMatrix(big));
  CHECK((s - big * big.transpose()).cwiseAbs().maxCoeff() <
        1e-10 * s.cwiseAbs().maxCoeff());
}

TEST_CASE("singular values match the eigenvalues of Z Z^T") {
  const Eigen::MatrixXd z = random_matrix(5, 9, 7);
  const SvdResult s = svd(z);
  REQUIRE(s.singular_values.size() == 5);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(z * z.transpose());
  REQUIRE(eig.info() == Eigen::Success);
  // Eigenvalues come out ascending; singular values descending.
  for (int i = 0; i < 5; ++i) {
    const double expected = std::sqrt(std::max(0.0, eig.eigenvalues()(4 - i)));
    CHECK(s.singular_values(i) == doctest::Approx(expected).epsilon(1e-10));
  }
  for (int i = 0; i + 1 < 5; ++i)
    CHECK(s.singular_values(i) >= s.singular_values(i + 1));
}

TEST_CASE("left vectors are orthonormal and the factorization reconstructs Z") {
  const Eigen::MatrixXd z = random_matrix(6, 10, 11);
  const SvdResult s = svd(z);
  REQUIRE(s.left_vectors.rows() == 6);
  REQUIRE(s.left_vectors.cols() == 6);
  REQUIRE(s.right_vectors.rows() == 10);
  REQUIRE(s.right_vectors.cols() == 6);

  const Eigen::MatrixXd utu = s.left_vectors.transpose() * s.left_vectors;
  CHECK((utu - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::MatrixXd rebuilt = s.left_vectors.leftCols(6) *
                                  s.singular_values.asDiagonal() *
                                  s.right_vectors.transpose();
  CHECK((rebuilt - z).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("sign convention: each left vector leads with a non-negative entry") {
  for (std::uint64_t seed : {3ULL, 13ULL, 23ULL}) {
    const SvdResult s = svd(random_matrix(7, 12, seed));
    for (int c = 0; c < s.left_vectors.cols(); ++c) {
      for (int r = 0; r < s.left_vectors.rows(); ++r) {
        const double x = s.left_vectors(r, c);
        if (std::abs(x) > 1e-12) {
          CHECK(x > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("svd rejects junk input") {
  Eigen::MatrixXd empty;
  CHECK_THROWS_AS(svd(empty), NumericalFailure);
  Eigen::MatrixXd bad(3, 3);
  bad.setOnes();
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd(bad), NumericalFailure);
}

TEST_CASE("smallest_subspace picks the trailing left vectors of a diagonal") {
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(5, 5);
  z.diagonal() << 5, 4, 3, 2, 1;
  const Eigen::MatrixXd c = smallest_subspace(svd(z), 2);
  REQUIRE(c.rows() == 2);
  REQUIRE(c.cols() == 5);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 5);
  expected(0, 3) = 1.0;
  expected(1, 4) = 1.0;
  CHECK((c - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the constraint rows annihilate the data they came from") {
  // Rank-3 data embedded in 6 rows: the 3 smallest directions are exact
  // null vectors.
  const Eigen::MatrixXd basis = random_matrix(3, 8, 31);
  Eigen::MatrixXd mix(6, 3);
  mix << 1, 0, 0,
         0, 1, 0,
         0, 0, 1,
         1, 1, 0,
         0, 1, 1,
         1, 0, 1;
  const Eigen::MatrixXd z = mix * basis;
  const Eigen::MatrixXd c = smallest_subspace(svd(z), 3);
  CHECK((c * z).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("a vanishing spectral gap raises DegenerateGap") {
  const Eigen::MatrixXd z = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(smallest_subspace(svd(z), 1), DegenerateGap);
  CHECK_THROWS_AS(smallest_subspace(svd(z), 2), DegenerateGap);
  // Taking the whole space needs no gap.
  CHECK(smallest_subspace(svd(z), 3).rows() == 3);
}

TEST_CASE("wide-matrix padding: null directions beyond min(n, N) count as zero") {
  const Eigen::MatrixXd z = random_matrix(4, 2, 37);
  // Null space has dimension 2 and is well separated from the data directions.
  const Eigen::MatrixXd c = smallest_subspace(svd(z), 2);
  CHECK((c * z).cwiseAbs().maxCoeff() < 1e-12);
  // Asking for a slice that cuts through the zero block is ambiguous.
  const Eigen::MatrixXd one_col = random_matrix(4, 1, 41);
  CHECK_THROWS_AS(smallest_subspace(svd(one_col), 1), DegenerateGap);
  CHECK_THROWS_AS(smallest_subspace(svd(one_col), 2), DegenerateGap);
  CHECK(smallest_subspace(svd(one_col), 3).rows() == 3);
}

TEST_CASE("smallest_subspace validates its arguments") {
  const SvdResult s = svd(random_matrix(4, 4, 43));
  CHECK_THROWS_AS(smallest_subspace(s, 0), NumericalFailure);
  CHECK_THROWS_AS(smallest_subspace(s, 5), NumericalFailure);
}

TEST_CASE("cholesky_diagonal takes square roots of variances") {
  Eigen::VectorXd variances(3);
  variances << 4, 9, 16;
  const DiagonalScaling l = cholesky_diagonal(variances);
  REQUIRE(l.std_devs.size() == 3);
  CHECK(l.std_devs(0) == 2.0);
  CHECK(l.std_devs(1) == 3.0);
  CHECK(l.std_devs(2) == 4.0);

  Eigen::VectorXd with_zero(2);
  with_zero << 1, 0;
  CHECK_THROWS_AS(cholesky_diagonal(with_zero), NonPositiveVariance);
  Eigen::VectorXd negative(1);
  negative << -2;
  CHECK_THROWS_AS(cholesky_diagonal(negative), NonPositiveVariance);
}

TEST_SUITE_END();
