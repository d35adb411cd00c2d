#include "radgas/model.hpp"

#include <cmath>
#include <complex>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"

namespace radgas {

SpectralField recover_q_spectral(const SpectralField& U, int axis) {
  SpectralField out = derivative_spectral(U, axis);
  apply_multiplier_inplace(out, helmholtz_inverse_symbol());
  for (auto& z : out.coeffs) z = -z;
  return out;
}

VectorField recover_q(const Field& u) {
  const SpectralField U = forward_transform(u);
  VectorField q(u.grid);
  for (int j = 0; j < u.grid.dim(); ++j)
    q[j] = inverse_transform(recover_q_spectral(U, j));
  return q;
}

Field div_q(const Field& u) {
  SpectralField U = forward_transform(u);
  // -(1-Delta)^{-1} Delta: symbol |xi|^2/(1+|xi|^2).
  apply_multiplier_inplace(
      U, PropagatorSymbol{"divq", [](double s) { return s / (1.0 + s); }});
  return inverse_transform(U);
}

double mass(const Field& u) {
  double sum = 0.0, c = 0.0;
  for (double v : u.values) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return u.grid.cell_volume() * sum;
}

SpectralField flux_divergence_spectral(const SpectralField& U, const FluxSpec& flux) {
  const Grid& g = U.grid;
  if (flux.axes() != g.dim()) throw ConfigError("flux axis count does not match grid dim");
  SpectralField acc(g);
  if (flux.is_zero()) return acc;

  SpectralField Ud = dealias(U);
  std::vector<std::complex<double>> buf;
  inverse_transform_raw(Ud, buf);

  Field prod(g);
  auto fill_product = [&](int axis) {
    for (std::size_t i = 0; i < buf.size(); ++i) {
      const double v = flux.eval(axis, buf[i].real());
      if (!std::isfinite(v))
        throw RegimeError("flux evaluation overflowed (solution left the small-data regime)",
                          0.0);
      prod.values[i] = v;
    }
  };

  if (flux.isotropic()) {
    // One product serves every axis.
    fill_product(0);
    SpectralField P = forward_transform(prod);
    dealias_inplace(P);
    for (int j = 0; j < g.dim(); ++j) {
      const SpectralField D = derivative_spectral(P, j);
      for (std::size_t i = 0; i < acc.size(); ++i) acc.coeffs[i] += D.coeffs[i];
    }
  } else {
    for (int j = 0; j < g.dim(); ++j) {
      fill_product(j);
      SpectralField P = forward_transform(prod);
      dealias_inplace(P);
      const SpectralField D = derivative_spectral(P, j);
      for (std::size_t i = 0; i < acc.size(); ++i) acc.coeffs[i] += D.coeffs[i];
    }
  }
  return acc;
}

Field flux_divergence(const Field& u, const FluxSpec& flux) {
  return inverse_transform(flux_divergence_spectral(forward_transform(u), flux));
}

Field rhs_decoupled(const Field& u, const FluxSpec& flux) {
  const SpectralField U = forward_transform(u);
  SpectralField rhs = flux_divergence_spectral(U, flux);
  // u_t = -div f(u) - (1 - (1+|xi|^2)^{-1}) u = -div f(u) - |xi|^2/(1+|xi|^2) u.
  const Grid& g = u.grid;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const double s = mode_xi_sq(g, i);
    rhs.coeffs[i] = -rhs.coeffs[i] - (s / (1.0 + s)) * U.coeffs[i];
  }
  return inverse_transform(rhs);
}

CoupledResidual coupled_residual(const Field& u, const Field& u_t, const VectorField& q,
                                 const FluxSpec& flux) {
  const Grid& g = u.grid;
  if (u_t.grid != g || q.grid != g) throw ConfigError("coupled_residual: grid mismatch");

  CoupledResidual res{Field(g), VectorField(g)};

  // r1 = u_t + div f(u) + div q
  Field divf = flux_divergence(u, flux);
  Field dq = divergence(q);
  for (std::size_t i = 0; i < res.r1.size(); ++i)
    res.r1.values[i] = u_t.values[i] + divf.values[i] + dq.values[i];

  // r2 = -grad(div q) + q + grad u
  VectorField grad_divq = gradient(dq);
  VectorField grad_u = gradient(u);
  for (int j = 0; j < g.dim(); ++j)
    for (std::size_t i = 0; i < res.r2[j].size(); ++i)
      res.r2[j].values[i] = -grad_divq[j].values[i] + q[j].values[i] + grad_u[j].values[i];
  return res;
}

ModelState make_state(double t, const Field& u) {
  return ModelState{t, u, recover_q(u), mass(u)};
}

}  // namespace radgas
