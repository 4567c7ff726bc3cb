#pragma once

#include <stdexcept>
#include <string>

namespace latgkp {

/// Wavefunction left the representable domain or produced NaN/Inf.
class PropagationError : public std::runtime_error {
 public:
  explicit PropagationError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested grid/window cannot hold the state to the required probability.
class InsufficientDomainError : public std::runtime_error {
 public:
  explicit InsufficientDomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A physics request has no solution (e.g. fidelity target unreachable).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latgkp
