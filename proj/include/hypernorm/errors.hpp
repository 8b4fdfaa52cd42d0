#pragma once

#include <stdexcept>
#include <string>

namespace hypernorm {

// Parameter outside the domain of an operation (k > n, c outside (0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller-supplied data violates a stated precondition (non-normalised
// weighting, change bound exceeded, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inconsistent dimensions or malformed input.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical guarantee failed to hold on computed output. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypernorm
