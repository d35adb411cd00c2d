#pragma once

#include <string>
#include <vector>

namespace radgas {

/// Per-axis nonlinear flux f_j(u) = a_j u^2 + b_j u^3.
///
/// Every admissible flux here satisfies f_j(0) = f_j'(0) = 0 identically,
/// i.e. f_j(u) = O(u^2) near zero.  A zero flux (all coefficients 0) turns
/// the evolution into the pure linear semigroup.
struct FluxSpec {
  std::string name;
  std::vector<double> quad;   // a_j, one per axis
  std::vector<double> cubic;  // b_j, one per axis

  double eval(int axis, double u) const {
    return quad[axis] * u * u + cubic[axis] * u * u * u;
  }
  double deriv(int axis, double u) const {
    return 2.0 * quad[axis] * u + 3.0 * cubic[axis] * u * u;
  }
  int axes() const { return static_cast<int>(quad.size()); }
  bool is_zero() const;
  /// All axes share identical coefficients (lets the solver reuse one
  /// product evaluation for every direction).
  bool isotropic() const;
};

/// f_j(u) = u^2/2 for every axis, the canonical Hamer-model choice.
FluxSpec burgers_flux(int dim);
/// General quadratic+cubic coefficients, one pair per axis.
FluxSpec polynomial_flux(int dim, std::vector<double> quad, std::vector<double> cubic);
/// f == 0: linear evolution.
FluxSpec zero_flux(int dim);

}  // namespace radgas
