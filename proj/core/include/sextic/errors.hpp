#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/// A computation that is configured correctly but fails numerically
/// (conditioning loss, unresolved bracketing, complex eigenvalues, ...).
/// Distinct from std::invalid_argument, which flags bad configuration.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sextic
