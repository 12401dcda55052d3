#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

// Invalid physical configuration: non-positive couplings, a chain reaching the
// field singularity, an inconsistent lambda/B0 pair, a packet that does not
// fit the chain.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigensolver failed to converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial propagator would need more terms than the configured budget
// allows; split the time step and evolve in pieces.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure, annotated with the offending path.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what, const std::string& path)
      : std::runtime_error(what + ": " + path) {}
};

}  // namespace spinchain
