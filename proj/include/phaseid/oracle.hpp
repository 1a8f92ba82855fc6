#ifndef PHASEID_ORACLE_HPP
#define PHASEID_ORACLE_HPP

#include "phaseid/kernels.hpp"
#include "phaseid/measurements.hpp"
#include "phaseid/topology.hpp"

namespace phaseid {

inline constexpr int kOracleMaxConsumers = 12;  // 3^12 candidates

struct OracleResult {
  PhaseAssignment best;
  double best_residual = 0.0;
  double runner_up_residual = 0.0;
};

/// Exhaustive search over all 3^n_i assignments, minimizing the Frobenius
/// norm of (phase rows) - (per-assignment consumer sums). Candidates are
/// enumerated in lexicographic assignment order (consumer 0 most
/// significant, A < B < C) and ties go to the earliest. With
/// apply_loss_correction the phase rows are loss-corrected first, so the
/// search sees the same data as the main pipeline. Throws TooLarge when
/// n_i exceeds the hard cap.
OracleResult brute_force_assign(
    const MeasurementMatrix& z, bool apply_loss_correction,
    kernels::Exec exec = kernels::Exec::parallel);

}  // namespace phaseid

#endif
