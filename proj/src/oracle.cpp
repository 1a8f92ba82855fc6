#include "phaseid/oracle.hpp"

#include <cmath>
#include <limits>

#include "phaseid/preprocess.hpp"

namespace phaseid {

namespace {

struct Candidate {
  double residual = std::numeric_limits<double>::infinity();
  long long index = -1;

  bool operator<(const Candidate& o) const {
    if (residual != o.residual) return residual < o.residual;
    return index < o.index;
  }
};

// Two smallest candidates over a union; associative and commutative, so the
// parallel merge order cannot change the outcome.
struct BestPair {
  Candidate best;
  Candidate second;

  void offer(const Candidate& c) {
    if (c < best) {
      second = best;
      best = c;
    } else if (c < second) {
      second = c;
    }
  }

  void merge(const BestPair& o) {
    offer(o.best);
    offer(o.second);
  }
};

// Consumer c takes digit (index / 3^(n_i-1-c)) mod 3, so ascending index is
// lexicographic assignment order.
void decode(long long index, int n_i, std::vector<int>& digits) {
  for (int c = n_i - 1; c >= 0; --c) {
    digits[c] = static_cast<int>(index % 3);
    index /= 3;
  }
}

double residual_squared(const Eigen::MatrixXd& dep, const Eigen::MatrixXd& indep,
                        const std::vector<int>& digits) {
  double acc = 0.0;
  const int n_i = static_cast<int>(indep.rows());
  for (int j = 0; j < indep.cols(); ++j) {
    double sums[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < n_i; ++c) sums[digits[c]] += indep(c, j);
    for (int p = 0; p < 3; ++p) {
      double d = dep(p, j) - sums[p];
      acc += d * d;
    }
  }
  return acc;
}

BestPair scan_serial(const Eigen::MatrixXd& dep, const Eigen::MatrixXd& indep,
                     long long candidates) {
  const int n_i = static_cast<int>(indep.rows());
  BestPair result;
  std::vector<int> digits(n_i);
  for (long long k = 0; k < candidates; ++k) {
    decode(k, n_i, digits);
    result.offer({residual_squared(dep, indep, digits), k});
  }
  return result;
}

BestPair scan_parallel(const Eigen::MatrixXd& dep, const Eigen::MatrixXd& indep,
                       long long candidates) {
  const int n_i = static_cast<int>(indep.rows());
  BestPair result;
#pragma omp parallel
  {
    BestPair local;
    std::vector<int> digits(n_i);
#pragma omp for schedule(static)
    for (long long k = 0; k < candidates; ++k) {
      decode(k, n_i, digits);
      local.offer({residual_squared(dep, indep, digits), k});
    }
#pragma omp critical
    result.merge(local);
  }
  return result;
}

}  // namespace

OracleResult brute_force_assign(const MeasurementMatrix& z,
                                bool apply_loss_correction,
                                kernels::Exec exec) {
  const int n_i = z.consumer_count();
  if (n_i > kOracleMaxConsumers)
    throw TooLarge("brute force over 3^" + std::to_string(n_i) +
                   " assignments refused; cap is n_i <= " +
                   std::to_string(kOracleMaxConsumers));
  if (n_i < 1) throw TooLarge("no consumers to assign");

  Eigen::MatrixXd dep;
  if (apply_loss_correction) {
    MeasurementMatrix corrected = remove_losses(z, estimate_losses(z));
    dep = corrected.dependent_block();
  } else {
    dep = z.dependent_block();
  }
  Eigen::MatrixXd indep = z.independent_block();

  long long candidates = 1;
  for (int c = 0; c < n_i; ++c) candidates *= 3;

  BestPair pair = exec == kernels::Exec::parallel
                      ? scan_parallel(dep, indep, candidates)
                      : scan_serial(dep, indep, candidates);

  std::vector<int> digits(n_i);
  decode(pair.best.index, n_i, digits);
  std::vector<Phase> phases(n_i);
  for (int c = 0; c < n_i; ++c) phases[c] = static_cast<Phase>(digits[c]);

  OracleResult out;
  out.best = PhaseAssignment(std::move(phases));
  out.best_residual = std::sqrt(pair.best.residual);
  out.runner_up_residual = std::sqrt(pair.second.residual);
  return out;
}

}  // namespace phaseid
