#pragma once

#include <complex>
#include <vector>

#include "radgas/grid.hpp"

namespace radgas {

/// Real scalar samples of u(.,t) on a grid, one value per node.
struct Field {
  Grid grid;
  std::vector<double> values;

  explicit Field(const Grid& g) : grid(g), values(g.total_points(), 0.0) {}
  Field(const Grid& g, std::vector<double> v);

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }

  /// True when every sample is finite.
  bool finite() const;
};

/// Complex Fourier coefficients on the grid's frequency lattice.
/// Convention: forward transform carries no prefactor, the inverse carries
/// 1/N^n, so coeffs[0] of a real field equals the plain sample sum.
struct SpectralField {
  Grid grid;
  std::vector<std::complex<double>> coeffs;

  explicit SpectralField(const Grid& g) : grid(g), coeffs(g.total_points()) {}
  SpectralField(const Grid& g, std::vector<std::complex<double>> c);

  std::complex<double>& operator[](std::size_t i) { return coeffs[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return coeffs[i]; }
  std::size_t size() const { return coeffs.size(); }
};

/// n real components, q = (q_1, ..., q_n).
struct VectorField {
  Grid grid;
  std::vector<Field> components;

  explicit VectorField(const Grid& g) : grid(g), components(g.dim(), Field(g)) {}

  Field& operator[](int j) { return components[j]; }
  const Field& operator[](int j) const { return components[j]; }
  int dim() const { return static_cast<int>(components.size()); }
};

// Elementwise arithmetic used by tests and diagnostics.
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& a);
SpectralField operator-(const SpectralField& a, const SpectralField& b);

}  // namespace radgas
