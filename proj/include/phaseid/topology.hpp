#ifndef PHASEID_TOPOLOGY_HPP
#define PHASEID_TOPOLOGY_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "phaseid/errors.hpp"

namespace phaseid {

/// The three supply phases, ordered A < B < C for deterministic output.
enum class Phase : int { A = 0, B = 1, C = 2 };

inline constexpr int kPhaseCount = 3;

char phase_letter(Phase p);
Phase phase_from_letter(char c);  // throws MalformedMatrix on anything but A/B/C

/// Total map consumer index -> phase. Consumers are dense, zero-based, and
/// keep their index for the whole run; id <-> index mapping is the concern of
/// the file layer.
class PhaseAssignment {
 public:
  PhaseAssignment() = default;
  explicit PhaseAssignment(std::vector<Phase> phase_of)
      : phase_of_(std::move(phase_of)) {}

  int consumer_count() const { return static_cast<int>(phase_of_.size()); }
  Phase phase_of(int consumer) const { return phase_of_.at(consumer); }
  const std::vector<Phase>& phases() const { return phase_of_; }

  /// Consumers on each phase, in index order.
  std::vector<int> consumers_on(Phase p) const;

  bool operator==(const PhaseAssignment&) const = default;

 private:
  std::vector<Phase> phase_of_;
};

/// 3 x n_i matrix over {0, 1}; row r is phase r, column c is consumer c, and
/// each column holds exactly one 1. Equal to the negated parent-row block of
/// the forest's incidence matrix.
struct ConnectivityMatrix {
  Eigen::Matrix<int, 3, Eigen::Dynamic> entries;

  bool operator==(const ConnectivityMatrix& o) const {
    return entries.rows() == o.entries.rows() &&
           entries.cols() == o.entries.cols() && entries == o.entries;
  }
};

/// Entry (r, c) = 1 iff consumer c is on phase r.
ConnectivityMatrix assignment_to_matrix(const PhaseAssignment& a);

/// Inverse of assignment_to_matrix; throws MalformedMatrix when a column does
/// not hold exactly one 1 or an entry is outside {0, 1}.
PhaseAssignment matrix_to_assignment(const ConnectivityMatrix& m);

std::string to_string(const PhaseAssignment& a);

}  // namespace phaseid

#endif
