#pragma once

#include <functional>
#include <string>

namespace radgas {

/// A radial Fourier multiplier m(|xi|^2), applied diagonally in spectral
/// space.  Every operator in this solver -- (1-Delta)^{-1}, the semigroup
/// e^{-|xi|^2 t/(1+|xi|^2)}, the heat kernel e^{-|xi|^2 t} -- is of this
/// form; they are real and even, so they map real fields to real fields.
struct PropagatorSymbol {
  std::string name;
  std::function<double(double xi_sq)> eval;

  /// Value at xi = 0; the mass mode is scaled by exactly this factor.
  double at_zero() const { return eval(0.0); }
};

PropagatorSymbol identity_symbol();
/// 1/(1+|xi|^2), the kernel K of (1-Delta)^{-1}: positive, unit mass.
PropagatorSymbol helmholtz_inverse_symbol();
/// -|xi|^2 (the Laplacian).
PropagatorSymbol laplacian_symbol();
/// e^{-|xi|^2 t/(1+|xi|^2)}, the linear solution operator G(t).
PropagatorSymbol semigroup_symbol(double t);
/// e^{-|xi|^2 t}, the heat semigroup G_0(t).
PropagatorSymbol heat_symbol(double t);
/// G(t) - G_0(t) as a single symbol (small for |xi| -> 0 and t -> inf).
PropagatorSymbol semigroup_minus_heat_symbol(double t);

}  // namespace radgas
