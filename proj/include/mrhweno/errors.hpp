#pragma once

#include <stdexcept>
#include <string>

namespace mrhweno {

// Invalid grid, boundary or run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-physical state (rho <= 0 or p <= 0) encountered while evaluating the scheme.
class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(const std::string& what, long cell = -1)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const { return cell_; }

 private:
  long cell_;
};

// Degenerate Riemann problem (wave ordering violated or zero denominators).
class FluxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mrhweno
