#ifndef PHASEID_ERRORS_HPP
#define PHASEID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phaseid {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedMatrix : Error {
  using Error::Error;
};

struct NumericalFailure : Error {
  using Error::Error;
};

/// The singular-value gap delimiting the requested subspace is (numerically)
/// zero, so the subspace is not unique.
struct DegenerateGap : Error {
  using Error::Error;
};

struct NonPositiveVariance : Error {
  using Error::Error;
};

/// Fewer intervals than consumers: the connectivity cannot be determined
/// uniquely from the data.
struct InsufficientSamples : Error {
  using Error::Error;
};

/// Consumer readings are linearly dependent; the constraint subspace is
/// wider than the three conservation relations.
struct RankDeficientData : Error {
  using Error::Error;
};

struct SingularDependentBlock : Error {
  using Error::Error;
};

/// An interval whose phase-meter readings sum to zero cannot have losses
/// apportioned across phases.
struct ZeroPhaseTotal : Error {
  using Error::Error;
};

struct ZeroMeanRow : Error {
  using Error::Error;
};

/// Brute-force verification was asked for more consumers than the hard cap.
struct TooLarge : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

/// Syntactic problem in an input file; carries 1-based line and column.
struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Structurally valid file whose content violates the dataset schema.
struct SchemaMismatch : Error {
  using Error::Error;
};

}  // namespace phaseid

#endif
