#pragma once

#include <stdexcept>
#include <string>

namespace stefan_kit {

/// Argument outside the mathematical domain of a function (x <= 0 for F2, t <= 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Problem data violates a physical invariant or a file is malformed.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation requested in the wrong regime (e.g. a front position for a pure-conduction problem).
struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to meet its own contract.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stefan_kit
