#pragma once

#include <stdexcept>
#include <string>

namespace billiard {

// Raised when BilliardParams (or any caller input) violates a constraint.
// The message names the violated constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Projection is not generic: a crossing on a corner/boundary point, a triple
// point, or a tangency.
class DegenerateProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A crossing has zero height difference at the requested phase.
class SingularPhaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every phase leaves some crossing singular.
class NoValidPhaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The limit diagram has a crossing whose height difference vanishes for
// every phase.
class LimitSingularError : public NoValidPhaseError {
 public:
  using NoValidPhaseError::NoValidPhaseError;
};

class UnsupportedLinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant (symmetry, pairing, closure) failed to hold.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace billiard
