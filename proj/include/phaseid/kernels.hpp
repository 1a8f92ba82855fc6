#ifndef PHASEID_KERNELS_HPP
#define PHASEID_KERNELS_HPP

#include <Eigen/Core>

namespace phaseid::kernels {

/// Execution policy for the data-parallel kernels. Every kernel keeps a
/// serial reference implementation; the parallel variant computes each output
/// element with the identical expression, so the two agree bit for bit.
enum class Exec { serial, parallel };

bool parallel_available();
int max_threads();

/// Gram matrix Z * Z^T (uncentered, unnormalized).
Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& z);
Eigen::MatrixXd gram_parallel(const Eigen::MatrixXd& z);
Eigen::MatrixXd gram(const Eigen::MatrixXd& z, Exec exec = Exec::parallel);

/// Divide row i of z by divisors[i].
Eigen::MatrixXd scale_rows_serial(const Eigen::MatrixXd& z,
                                  const Eigen::VectorXd& divisors);
Eigen::MatrixXd scale_rows_parallel(const Eigen::MatrixXd& z,
                                    const Eigen::VectorXd& divisors);
Eigen::MatrixXd scale_rows(const Eigen::MatrixXd& z,
                           const Eigen::VectorXd& divisors,
                           Exec exec = Exec::parallel);

}  // namespace phaseid::kernels

#endif
