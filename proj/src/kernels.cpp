#include "phaseid/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phaseid::kernels {

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Shared per-entry expression; k runs in ascending order in both variants.
inline double row_dot(const Eigen::MatrixXd& z, Eigen::Index i, Eigen::Index j) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < z.cols(); ++k) acc += z(i, k) * z(j, k);
  return acc;
}

}  // namespace

Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& z) {
  const Eigen::Index n = z.rows();
  Eigen::MatrixXd s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double v = row_dot(z, i, j);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

Eigen::MatrixXd gram_parallel(const Eigen::MatrixXd& z) {
  const Eigen::Index n = z.rows();
  Eigen::MatrixXd s(n, n);
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double v = row_dot(z, i, j);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

Eigen::MatrixXd gram(const Eigen::MatrixXd& z, Exec exec) {
  return exec == Exec::parallel ? gram_parallel(z) : gram_serial(z);
}

Eigen::MatrixXd scale_rows_serial(const Eigen::MatrixXd& z,
                                  const Eigen::VectorXd& divisors) {
  Eigen::MatrixXd out(z.rows(), z.cols());
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      out(i, j) = z(i, j) / divisors(i);
  return out;
}

Eigen::MatrixXd scale_rows_parallel(const Eigen::MatrixXd& z,
                                    const Eigen::VectorXd& divisors) {
  Eigen::MatrixXd out(z.rows(), z.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      out(i, j) = z(i, j) / divisors(i);
  return out;
}

Eigen::MatrixXd scale_rows(const Eigen::MatrixXd& z,
                           const Eigen::VectorXd& divisors, Exec exec) {
  return exec == Exec::parallel ? scale_rows_parallel(z, divisors)
                                : scale_rows_serial(z, divisors);
}

}  // namespace phaseid::kernels
