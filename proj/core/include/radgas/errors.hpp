#pragma once

#include <stdexcept>
#include <string>

namespace radgas {

/// Invalid user-facing configuration (grid spec, initial data, CLI input).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The solution left the small-data regime (blow-up guard tripped).
class RegimeError : public std::runtime_error {
 public:
  RegimeError(const std::string& what, double t) : std::runtime_error(what), time(t) {}
  double time = 0.0;
};

/// NaN/Inf or other floating-point corruption detected.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Spectral coefficients violate the Hermitian symmetry of a real field.
class SymmetryError : public std::runtime_error {
 public:
  explicit SymmetryError(const std::string& what) : std::runtime_error(what) {}
};

/// File format / IO failures with typed intent (version, shape mismatch).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A decay fit could not be performed (too few samples, nonpositive values).
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radgas
