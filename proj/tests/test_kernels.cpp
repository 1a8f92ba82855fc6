#include "doctest.h"
#include "phaseid/kernels.hpp"
#include "phaseid/rng.hpp"

using namespace phaseid;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(-3.0, 3.0);
  return m;
}

// The reference the kernels are checked against: plain double loop with the
// same ascending-k accumulation the kernels promise.
Eigen::MatrixXd gram_by_hand(const Eigen::MatrixXd& z) {
  const int n = static_cast<int>(z.rows());
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < z.cols(); ++k) acc += z(i, k) * z(j, k);
      s(i, j) = acc;
      s(j, i) = acc;
    }
  }
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("gram matches the double-loop reference bit for bit") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Eigen::MatrixXd z = random_matrix(7, 13, seed);
    const Eigen::MatrixXd expected = gram_by_hand(z);
    CHECK(kernels::gram_serial(z) == expected);
    CHECK(kernels::gram_parallel(z) == expected);
  }
}

TEST_CASE("gram on a tiny hand example") {
  Eigen::MatrixXd z(2, 2);
  z << 1, 2,
       3, 4;
  Eigen::MatrixXd expected(2, 2);
  expected << 5, 11,
              11, 25;
  CHECK(kernels::gram(z) == expected);
}

TEST_CASE("gram of a zero-column matrix is the zero matrix") {
  const Eigen::MatrixXd z(4, 0);
  const Eigen::MatrixXd s = kernels::gram(z);
  CHECK(s.rows() == 4);
  CHECK(s.cols() == 4);
  CHECK(s.isZero(0.0));
}

TEST_CASE("gram is exactly symmetric") {
  const Eigen::MatrixXd s = kernels::gram(random_matrix(20, 35, 9));
  CHECK(s == s.transpose().eval());
}

TEST_CASE("serial and parallel gram agree bitwise on larger inputs") {
  const Eigen::MatrixXd z = random_matrix(60, 150, 17);
  CHECK(kernels::gram_serial(z) == kernels::gram_parallel(z));
}

TEST_CASE("scale_rows divides each row by its divisor") {
  const Eigen::MatrixXd z = random_matrix(6, 9, 21);
  Eigen::VectorXd d(6);
  d << 1.0, 2.0, 0.5, 3.0, 0.25, 7.0;
  const Eigen::MatrixXd out = kernels::scale_rows(z, d);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 9; ++j) CHECK(out(i, j) == z(i, j) / d(i));
}

TEST_CASE("serial and parallel scale_rows agree bitwise") {
  const Eigen::MatrixXd z = random_matrix(40, 90, 33);
  Eigen::VectorXd d(40);
  Rng rng(34);
  for (int i = 0; i < 40; ++i) d(i) = rng.uniform(0.1, 5.0);
  CHECK(kernels::scale_rows_serial(z, d) == kernels::scale_rows_parallel(z, d));
}

TEST_CASE("dispatch wrappers route to the same results") {
  const Eigen::MatrixXd z = random_matrix(10, 20, 41);
  CHECK(kernels::gram(z, kernels::Exec::serial) ==
        kernels::gram(z, kernels::Exec::parallel));
  Eigen::VectorXd d = Eigen::VectorXd::LinSpaced(10, 1.0, 4.0);
  CHECK(kernels::scale_rows(z, d, kernels::Exec::serial) ==
        kernels::scale_rows(z, d, kernels::Exec::parallel));
}

TEST_CASE("thread introspection is consistent") {
  CHECK(kernels::max_threads() >= 1);
  if (!kernels::parallel_available()) CHECK(kernels::max_threads() == 1);
}

TEST_SUITE_END();
