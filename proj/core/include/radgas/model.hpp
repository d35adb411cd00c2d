#pragma once

#include "radgas/field.hpp"
#include "radgas/flux.hpp"

namespace radgas {

/// q = -(1-Delta)^{-1} grad u: component j has coefficients
/// -i xi_j/(1+|xi|^2) u_hat.
VectorField recover_q(const Field& u);
SpectralField recover_q_spectral(const SpectralField& U, int axis);

/// div q = -(1-Delta)^{-1} Delta u, computed as a single multiplier.
Field div_q(const Field& u);

/// Discrete integral dx^n * sum(u); the conserved "mass".
double mass(const Field& u);

/// Dealiased spectral divergence of the flux, sum_j d_j f_j(u).
/// The quadratic product is formed in real space on 2/3-truncated spectra.
SpectralField flux_divergence_spectral(const SpectralField& U, const FluxSpec& flux);
Field flux_divergence(const Field& u, const FluxSpec& flux);

/// Right side of the decoupled evolution
///   u_t = -sum_j d_j f_j(u) - u + (1-Delta)^{-1} u.
/// Raises RegimeError when the flux evaluation produces non-finite values.
Field rhs_decoupled(const Field& u, const FluxSpec& flux);

/// Residuals of the original coupled system for a candidate triple:
///   r1 = u_t + sum_j d_j f_j(u) + div q
///   r2 = -grad div q + q + grad u
/// Both vanish along true solutions.
struct CoupledResidual {
  Field r1;
  VectorField r2;
};
CoupledResidual coupled_residual(const Field& u, const Field& u_t, const VectorField& q,
                                 const FluxSpec& flux);

/// One time slice (u, q, mass) with q and mass derived from u.
struct ModelState {
  double t = 0.0;
  Field u;
  VectorField q;
  double total_mass = 0.0;
};
ModelState make_state(double t, const Field& u);

}  // namespace radgas
