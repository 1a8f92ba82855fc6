#include "phaseid/topology.hpp"

namespace phaseid {

char phase_letter(Phase p) {
  switch (p) {
    case Phase::A:
      return 'A';
    case Phase::B:
      return 'B';
    case Phase::C:
      return 'C';
  }
  return '?';
}

Phase phase_from_letter(char c) {
  switch (c) {
    case 'A':
      return Phase::A;
    case 'B':
      return Phase::B;
    case 'C':
      return Phase::C;
  }
  throw MalformedMatrix(std::string("unknown phase letter '") + c + "'");
}

std::vector<int> PhaseAssignment::consumers_on(Phase p) const {
  std::vector<int> out;
  for (int c = 0; c < consumer_count(); ++c)
    if (phase_of_[c] == p) out.push_back(c);
  return out;
}

ConnectivityMatrix assignment_to_matrix(const PhaseAssignment& a) {
  ConnectivityMatrix m;
  m.entries.setZero(3, a.consumer_count());
  for (int c = 0; c < a.consumer_count(); ++c)
    m.entries(static_cast<int>(a.phase_of(c)), c) = 1;
  return m;
}

PhaseAssignment matrix_to_assignment(const ConnectivityMatrix& m) {
  if (m.entries.rows() != 3)
    throw MalformedMatrix("connectivity matrix must have 3 rows, got " +
                          std::to_string(m.entries.rows()));
  std::vector<Phase> phases(m.entries.cols());
  for (int c = 0; c < m.entries.cols(); ++c) {
    int ones = 0;
    Phase p = Phase::A;
    for (int r = 0; r < 3; ++r) {
      int v = m.entries(r, c);
      if (v != 0 && v != 1)
        throw MalformedMatrix("entry (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") is " + std::to_string(v) +
                              ", expected 0 or 1");
      if (v == 1) {
        ++ones;
        p = static_cast<Phase>(r);
      }
    }
    if (ones != 1)
      throw MalformedMatrix("column " + std::to_string(c) + " sums to " +
                            std::to_string(ones) + ", expected exactly one 1");
    phases[c] = p;
  }
  return PhaseAssignment(std::move(phases));
}

std::string to_string(const PhaseAssignment& a) {
  std::string s;
  s.reserve(a.consumer_count());
  for (Phase p : a.phases()) s.push_back(phase_letter(p));
  return s;
}

}  // namespace phaseid
