#include "radgas/propagators.hpp"

#include <cmath>
#include <string>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"
#include "radgas/series.hpp"
#include "radgas/symbols.hpp"

namespace radgas {

namespace {

void require_nonnegative_time(double t, const char* who) {
  if (t < 0.0 || !std::isfinite(t))
    throw ConfigError(std::string(who) + ": time must be finite and >= 0, got " +
                      std::to_string(t));
}

// Inverse complementary error function on (0, 1), Newton iteration.
double erfc_inv(double y) {
  double z = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double f = std::erfc(z) - y;
    const double df = -2.0 / std::sqrt(M_PI) * std::exp(-z * z);
    const double step = f / df;
    z -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

SpectralField propagate_G(const SpectralField& F, double t) {
  require_nonnegative_time(t, "propagate_G");
  return apply_multiplier(F, semigroup_symbol(t));
}

Field propagate_G(const Field& f, double t) {
  require_nonnegative_time(t, "propagate_G");
  SpectralField F = forward_transform(f);
  apply_multiplier_inplace(F, semigroup_symbol(t));
  return inverse_transform(F);
}

SpectralField propagate_heat(const SpectralField& F, double t) {
  require_nonnegative_time(t, "propagate_heat");
  return apply_multiplier(F, heat_symbol(t));
}

Field propagate_heat(const Field& f, double t) {
  require_nonnegative_time(t, "propagate_heat");
  SpectralField F = forward_transform(f);
  apply_multiplier_inplace(F, heat_symbol(t));
  return inverse_transform(F);
}

Field DiffusionWave::evaluate(double t) const {
  require_nonnegative_time(t, "DiffusionWave::evaluate");
  const double tau = t + time_offset;
  const int n = grid.dim();
  const double amp = mass * std::pow(4.0 * M_PI * tau, -0.5 * n);
  const double ctr = 0.5 * grid.box_length();
  Field out(grid);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto idx = grid.unflatten(flat);
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) {
      const double x = grid.coord(idx[d]) - ctr;
      r2 += x * x;
    }
    out.values[flat] = amp * std::exp(-r2 / (4.0 * tau));
  }
  return out;
}

DiffusionWavePair diffusion_wave(double mass, double t, const Grid& grid) {
  DiffusionWave wave{mass, grid, 1.0};
  if (mass == 0.0) return {Field(grid), VectorField(grid)};
  Field u_star = wave.evaluate(t);
  VectorField q_star(grid);
  const SpectralField U = forward_transform(u_star);
  for (int j = 0; j < grid.dim(); ++j) {
    SpectralField D = derivative_spectral(U, j);
    for (auto& z : D.coeffs) z = -z;
    q_star[j] = inverse_transform(D);
  }
  return {std::move(u_star), std::move(q_star)};
}

double box_validity_horizon(const Grid& grid, double width, double support_radius,
                            double tail_tol) {
  const double d = 0.5 * grid.box_length() - support_radius;
  if (d <= 0.0) return 0.0;
  const double z = erfc_inv(tail_tol / grid.dim());
  const double sigma_max = d / (std::sqrt(2.0) * z);
  const double horizon = 0.5 * (sigma_max * sigma_max - width * width);
  return horizon > 0.0 ? horizon : 0.0;
}

PropagatorDecayReport verify_propagator_decay(const Field& phi,
                                              const std::vector<double>& times,
                                              int max_order) {
  const int n = phi.grid.dim();
  const SpectralField Phi = forward_transform(phi);
  const double phi_l1 = l1_norm(phi);

  PropagatorDecayReport report;
  report.orders.resize(max_order + 1);
  for (int k = 0; k <= max_order; ++k) {
    report.orders[k].k = k;
    report.orders[k].points.reserve(times.size());
  }
  std::vector<double> phi_dk(max_order + 1);
  for (int k = 0; k <= max_order; ++k) phi_dk[k] = derivative_seminorm(Phi, k);

  for (double t : times) {
    const SpectralField Gt = propagate_G(Phi, t);
    for (int k = 0; k <= max_order; ++k) {
      const double value = derivative_seminorm(Gt, k);
      const double bound =
          std::pow(1.0 + t, -(0.25 * n + 0.5 * k)) * phi_l1 + std::exp(-0.5 * t) * phi_dk[k];
      report.orders[k].points.push_back({t, value, bound});
    }
  }

  // Bounded with no growth trend: the ratio's max over the last third of the
  // window must not exceed the earlier max by more than 25%.
  report.pass = true;
  for (auto& ord : report.orders) {
    double sup = 0.0, early = 0.0, late = 0.0;
    const std::size_t m = ord.points.size();
    const std::size_t split = m - m / 3;
    for (std::size_t i = 0; i < m; ++i) {
      const double ratio = ord.points[i].value / ord.points[i].bound;
      sup = std::max(sup, ratio);
      (i < split ? early : late) = std::max(i < split ? early : late, ratio);
    }
    ord.sup_ratio = sup;
    ord.pass = std::isfinite(sup) && (m < 3 || late <= 1.25 * early);
    report.pass = report.pass && ord.pass;
  }
  return report;
}

namespace {

std::vector<SlopeCheck> fitted_slope_checks(const SpectralField& U0,
                                            const std::vector<double>& times, int max_order,
                                            double slack, bool use_heat, double extra_order) {
  const int n = U0.grid.dim();
  std::vector<NormSeries> series(max_order + 1);
  for (double t : times) {
    SpectralField Ut = use_heat ? propagate_heat(U0, t)
                                : apply_multiplier(U0, semigroup_minus_heat_symbol(t));
    for (int k = 0; k <= max_order; ++k)
      series[k].push(t, derivative_seminorm(Ut, k));
  }
  std::vector<SlopeCheck> checks;
  for (int k = 0; k <= max_order; ++k) {
    SlopeCheck c;
    c.k = k;
    c.theory = -(0.25 * n + 0.5 * k + extra_order);
    const FitWindow window{times.front(), times.back()};
    const DecayFit fit = fit_decay(series[k], window);
    c.fitted = fit.exponent;
    c.rms = fit.rms;
    c.one_sided = true;
    c.pass = c.fitted <= c.theory + slack;
    for (std::size_t i = 0; i < series[k].size(); ++i)
      c.points.push_back({series[k].times[i], series[k].values[i], 0.0});
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace

std::vector<SlopeCheck> verify_G_minus_G0(const Field& u0, const std::vector<double>& times,
                                          int max_order, double slack) {
  if (times.size() < 6) throw ConfigError("verify_G_minus_G0: need at least 6 times");
  return fitted_slope_checks(forward_transform(u0), times, max_order, slack,
                             /*use_heat=*/false, /*extra_order=*/1.0);
}

std::vector<SlopeCheck> verify_heat_moment(const Field& phi, const std::vector<double>& times,
                                           int max_order, double slack) {
  if (times.size() < 6) throw ConfigError("verify_heat_moment: need at least 6 times");
  const double m = mass(phi);
  const double l1 = l1_norm(phi);
  if (std::abs(m) > 1e-10 * l1)
    throw ConfigError("verify_heat_moment: data must have zero mass, |mass| = " +
                      std::to_string(std::abs(m)));
  return fitted_slope_checks(forward_transform(phi), times, max_order, slack,
                             /*use_heat=*/true, /*extra_order=*/0.5);
}

}  // namespace radgas
