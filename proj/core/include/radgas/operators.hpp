#pragma once

#include "radgas/field.hpp"
#include "radgas/symbols.hpp"

namespace radgas {

/// coeffs'(xi) = m(|xi|^2) * coeffs(xi), pointwise over the lattice.
SpectralField apply_multiplier(const SpectralField& F, const PropagatorSymbol& m);
/// In-place variant.
void apply_multiplier_inplace(SpectralField& F, const PropagatorSymbol& m);

/// Spectral derivative along one axis: i*xi_j, with the Nyquist mode zeroed
/// (i*xi is sign-ambiguous there and would break realness).
SpectralField derivative_spectral(const SpectralField& F, int axis);

/// |xi|^2 of the lattice mode holding flat index `i` (helper for kernels).
double mode_xi_sq(const Grid& grid, std::size_t flat);

VectorField gradient(const Field& f);
Field divergence(const VectorField& v);
Field laplacian(const Field& f);
/// (1-Delta)^{-1} f, exact on the lattice via the Helmholtz symbol.
Field helmholtz_solve(const Field& f);

/// Zero every mode with |k_j| > N/3 on any axis (2/3-rule dealiasing).
void dealias_inplace(SpectralField& F);
SpectralField dealias(const SpectralField& F);

}  // namespace radgas
