#include "radgas/operators.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"

namespace radgas {

namespace {

// Shared mode loop: calls fn(flat, i0, i1, i2) over the full lattice.
template <typename F>
void for_each_mode(const Grid& grid, F&& fn) {
  const auto e = grid.extents();
  std::size_t flat = 0;
  for (int i0 = 0; i0 < e[0]; ++i0)
    for (int i1 = 0; i1 < e[1]; ++i1)
      for (int i2 = 0; i2 < e[2]; ++i2) fn(flat++, i0, i1, i2);
}

}  // namespace

double mode_xi_sq(const Grid& grid, std::size_t flat) {
  const auto idx = grid.unflatten(flat);
  double s = 0.0;
  for (int d = 0; d < grid.dim(); ++d) {
    const double x = grid.xi(idx[d]);
    s += x * x;
  }
  return s;
}

void apply_multiplier_inplace(SpectralField& F, const PropagatorSymbol& m) {
  const Grid& g = F.grid;
  // Per-axis xi^2 table; |xi|^2 assembles additively.
  const int n = g.points_per_axis();
  std::vector<double> xi2(n);
  for (int i = 0; i < n; ++i) xi2[i] = g.xi(i) * g.xi(i);
  const auto& eval = m.eval;
  switch (g.dim()) {
    case 1:
      for (int i = 0; i < n; ++i) F.coeffs[i] *= eval(xi2[i]);
      break;
    case 2:
      for (int i0 = 0; i0 < n; ++i0) {
        std::complex<double>* row = F.coeffs.data() + static_cast<std::size_t>(i0) * n;
        for (int i1 = 0; i1 < n; ++i1) row[i1] *= eval(xi2[i0] + xi2[i1]);
      }
      break;
    default:
      for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1) {
          const double s01 = xi2[i0] + xi2[i1];
          std::complex<double>* row =
              F.coeffs.data() + (static_cast<std::size_t>(i0) * n + i1) * n;
          for (int i2 = 0; i2 < n; ++i2) row[i2] *= eval(s01 + xi2[i2]);
        }
  }
}

SpectralField apply_multiplier(const SpectralField& F, const PropagatorSymbol& m) {
  SpectralField out = F;
  apply_multiplier_inplace(out, m);
  return out;
}

SpectralField derivative_spectral(const SpectralField& F, int axis) {
  const Grid& g = F.grid;
  if (axis < 0 || axis >= g.dim()) throw ConfigError("derivative axis out of range");
  SpectralField out(g);
  for_each_mode(g, [&](std::size_t flat, int i0, int i1, int i2) {
    const int i = axis == 0 ? i0 : (axis == 1 ? i1 : i2);
    if (g.is_nyquist(i)) {
      out.coeffs[flat] = 0.0;
      return;
    }
    out.coeffs[flat] = std::complex<double>(0.0, g.xi(i)) * F.coeffs[flat];
  });
  return out;
}

VectorField gradient(const Field& f) {
  const SpectralField F = forward_transform(f);
  VectorField out(f.grid);
  for (int j = 0; j < f.grid.dim(); ++j)
    out[j] = inverse_transform(derivative_spectral(F, j));
  return out;
}

Field divergence(const VectorField& v) {
  if (v.dim() != v.grid.dim()) throw ConfigError("vector field has wrong component count");
  SpectralField acc(v.grid);
  for (int j = 0; j < v.dim(); ++j) {
    const SpectralField D = derivative_spectral(forward_transform(v[j]), j);
    for (std::size_t i = 0; i < acc.size(); ++i) acc.coeffs[i] += D.coeffs[i];
  }
  return inverse_transform(acc);
}

Field laplacian(const Field& f) {
  SpectralField F = forward_transform(f);
  apply_multiplier_inplace(F, laplacian_symbol());
  return inverse_transform(F);
}

Field helmholtz_solve(const Field& f) {
  SpectralField F = forward_transform(f);
  apply_multiplier_inplace(F, helmholtz_inverse_symbol());
  return inverse_transform(F);
}

void dealias_inplace(SpectralField& F) {
  const Grid& g = F.grid;
  const int cut = g.points_per_axis() / 3;
  for_each_mode(g, [&](std::size_t flat, int i0, int i1, int i2) {
    const int k0 = std::abs(g.wave_index(i0));
    const int k1 = g.dim() > 1 ? std::abs(g.wave_index(i1)) : 0;
    const int k2 = g.dim() > 2 ? std::abs(g.wave_index(i2)) : 0;
    if (k0 > cut || k1 > cut || k2 > cut) F.coeffs[flat] = 0.0;
  });
}

SpectralField dealias(const SpectralField& F) {
  SpectralField out = F;
  dealias_inplace(out);
  return out;
}

}  // namespace radgas
