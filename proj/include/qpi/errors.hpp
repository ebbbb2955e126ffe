#pragma once

#include <stdexcept>
#include <string>

namespace qpi {

// Invalid argument for an otherwise total operation (0^-1, Γ_q at a pole, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator factor vanished (or cannot be separated from zero).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Operation requested in a mode that cannot honor it, e.g. an infinite
// product in exact arithmetic.
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A series or product failed to reach the requested tolerance.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpi
