#include "radgas/integrator.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"

namespace radgas {

Scheme scheme_from_name(const std::string& name) {
  if (name == "exp-euler") return Scheme::ExpEuler;
  if (name == "exp-rk2") return Scheme::ExpRK2;
  if (name == "exp-rk4") return Scheme::ExpRK4;
  throw ConfigError("unknown scheme '" + name + "' (expected exp-euler, exp-rk2, exp-rk4)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ExpEuler: return "exp-euler";
    case Scheme::ExpRK2: return "exp-rk2";
    default: return "exp-rk4";
  }
}

int scheme_order(Scheme s) {
  switch (s) {
    case Scheme::ExpEuler: return 1;
    case Scheme::ExpRK2: return 2;
    default: return 4;
  }
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("integrator: dt must be > 0");
  if (t_end < 0.0) throw ConfigError("integrator: t_end must be >= 0");
  if (!(blowup_factor > 1.0)) throw ConfigError("integrator: blowup factor must be > 1");
  double prev = -1.0;
  for (double t : output_times) {
    if (t < 0.0 || t > t_end + 1e-9)
      throw ConfigError("integrator: output time " + std::to_string(t) + " outside [0, t_end]");
    if (t <= prev) throw ConfigError("integrator: output times must be strictly increasing");
    prev = t;
  }
}

const Trajectory::Snapshot& Trajectory::at_time(double t) const {
  for (const auto& s : snapshots)
    if (std::abs(s.t - t) <= 1e-9 * (1.0 + std::abs(t))) return s;
  throw ConfigError("trajectory has no snapshot at t=" + std::to_string(t));
}

// phi functions: Taylor series below |z| = 0.5 (about 20 terms reach full
// precision there), closed forms with expm1 above.  All integrator symbols
// satisfy z = -dt |xi|^2/(1+|xi|^2), so |z| <= dt in this solver.
namespace {
double phi_series(double z, int j) {
  double fact = 1.0;
  for (int m = 2; m <= j; ++m) fact *= m;
  double term = 1.0 / fact;
  double sum = term;
  for (int m = 1; m < 24; ++m) {
    term *= z / (m + j);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}
}  // namespace

double phi1(double z) {
  if (std::abs(z) < 0.5) return phi_series(z, 1);
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 0.5) return phi_series(z, 2);
  return (std::expm1(z) - z) / (z * z);
}

double phi3(double z) {
  if (std::abs(z) < 0.5) return phi_series(z, 3);
  return (std::expm1(z) - z - 0.5 * z * z) / (z * z * z);
}

Stepper::Stepper(const Grid& grid, double dt, Scheme scheme, FluxSpec flux, bool dealias,
                 double blowup_linf)
    : grid_(grid),
      dt_(dt),
      scheme_(scheme),
      flux_(std::move(flux)),
      dealias_(dealias),
      blowup_linf_(blowup_linf) {
  const std::size_t total = grid.total_points();
  exp_full_.resize(total);
  const bool rk = scheme_ != Scheme::ExpEuler;
  if (rk) {
    exp_half_.resize(total);
    w_half_phi1_.resize(total);
  }
  if (scheme_ == Scheme::ExpEuler) w_euler_.resize(total);
  if (scheme_ == Scheme::ExpRK2) {
    w_rk2_a_.resize(total);
    w_rk2_b_.resize(total);
  }
  if (scheme_ == Scheme::ExpRK4) {
    w_rk4_a_.resize(total);
    w_rk4_b_.resize(total);
    w_rk4_c_.resize(total);
  }
  for (std::size_t i = 0; i < total; ++i) {
    const double s = mode_xi_sq(grid, i);
    const double lam = -s / (1.0 + s);
    const double z = dt * lam;
    exp_full_[i] = std::exp(z);
    if (rk) {
      exp_half_[i] = std::exp(0.5 * z);
      w_half_phi1_[i] = 0.5 * dt * phi1(0.5 * z);
    }
    switch (scheme_) {
      case Scheme::ExpEuler:
        w_euler_[i] = dt * phi1(z);
        break;
      case Scheme::ExpRK2:
        // Exponential midpoint: u+ = e^z u + dt[(phi1-2 phi2) N(u) + 2 phi2 N(U2)].
        w_rk2_a_[i] = dt * (phi1(z) - 2.0 * phi2(z));
        w_rk2_b_[i] = dt * 2.0 * phi2(z);
        break;
      case Scheme::ExpRK4: {
        const double p1 = phi1(z), p2 = phi2(z), p3 = phi3(z);
        w_rk4_a_[i] = dt * (p1 - 3.0 * p2 + 4.0 * p3);
        w_rk4_b_[i] = dt * (2.0 * p2 - 4.0 * p3);
        w_rk4_c_[i] = dt * (-p2 + 4.0 * p3);
        break;
      }
    }
  }
}

SpectralField Stepper::nonlinear(const SpectralField& U, double t_now) const {
  // N(u) = -div f(u), with the product dealiased per the 2/3 rule.
  SpectralField Ud = dealias_ ? dealias(U) : U;
  std::vector<std::complex<double>> buf;
  inverse_transform_raw(Ud, buf);

  double linf = 0.0;
  for (const auto& z : buf) linf = std::max(linf, std::abs(z.real()));
  if (!std::isfinite(linf))
    throw NumericalError("integrator state became non-finite at t=" + std::to_string(t_now));
  if (linf > blowup_linf_)
    throw RegimeError("blow-up guard: ||u||_inf = " + std::to_string(linf) +
                          " exceeded threshold " + std::to_string(blowup_linf_) +
                          " (left the small-data regime)",
                      t_now);

  Field prod(grid_);
  SpectralField acc(grid_);
  auto add_axis = [&](int axis, const SpectralField& P) {
    const SpectralField D = derivative_spectral(P, axis);
    for (std::size_t i = 0; i < acc.size(); ++i) acc.coeffs[i] -= D.coeffs[i];
  };
  if (flux_.isotropic()) {
    for (std::size_t i = 0; i < buf.size(); ++i)
      prod.values[i] = flux_.eval(0, buf[i].real());
    SpectralField P = forward_transform(prod);
    if (dealias_) dealias_inplace(P);
    for (int j = 0; j < grid_.dim(); ++j) add_axis(j, P);
  } else {
    for (int j = 0; j < grid_.dim(); ++j) {
      for (std::size_t i = 0; i < buf.size(); ++i)
        prod.values[i] = flux_.eval(j, buf[i].real());
      SpectralField P = forward_transform(prod);
      if (dealias_) dealias_inplace(P);
      add_axis(j, P);
    }
  }
  return acc;
}

void Stepper::step(SpectralField& U, double t_now) const {
  const std::size_t total = U.size();
  if (flux_.is_zero()) {
    // Pure semigroup: the Duhamel integrand vanishes identically.
    for (std::size_t i = 0; i < total; ++i) U.coeffs[i] *= exp_full_[i];
    return;
  }
  switch (scheme_) {
    case Scheme::ExpEuler: {
      const SpectralField N0 = nonlinear(U, t_now);
      for (std::size_t i = 0; i < total; ++i)
        U.coeffs[i] = exp_full_[i] * U.coeffs[i] + w_euler_[i] * N0.coeffs[i];
      return;
    }
    case Scheme::ExpRK2: {
      const SpectralField N0 = nonlinear(U, t_now);
      SpectralField mid(grid_);
      for (std::size_t i = 0; i < total; ++i)
        mid.coeffs[i] = exp_half_[i] * U.coeffs[i] + w_half_phi1_[i] * N0.coeffs[i];
      const SpectralField N1 = nonlinear(mid, t_now);
      for (std::size_t i = 0; i < total; ++i)
        U.coeffs[i] = exp_full_[i] * U.coeffs[i] + w_rk2_a_[i] * N0.coeffs[i] +
                      w_rk2_b_[i] * N1.coeffs[i];
      return;
    }
    case Scheme::ExpRK4: {
      const SpectralField N0 = nonlinear(U, t_now);
      SpectralField a(grid_);
      for (std::size_t i = 0; i < total; ++i)
        a.coeffs[i] = exp_half_[i] * U.coeffs[i] + w_half_phi1_[i] * N0.coeffs[i];
      const SpectralField Na = nonlinear(a, t_now);
      SpectralField b(grid_);
      for (std::size_t i = 0; i < total; ++i)
        b.coeffs[i] = exp_half_[i] * U.coeffs[i] + w_half_phi1_[i] * Na.coeffs[i];
      const SpectralField Nb = nonlinear(b, t_now);
      SpectralField c(grid_);
      for (std::size_t i = 0; i < total; ++i)
        c.coeffs[i] = exp_half_[i] * a.coeffs[i] +
                      w_half_phi1_[i] * (2.0 * Nb.coeffs[i] - N0.coeffs[i]);
      const SpectralField Nc = nonlinear(c, t_now);
      for (std::size_t i = 0; i < total; ++i)
        U.coeffs[i] = exp_full_[i] * U.coeffs[i] + w_rk4_a_[i] * N0.coeffs[i] +
                      w_rk4_b_[i] * (Na.coeffs[i] + Nb.coeffs[i]) + w_rk4_c_[i] * Nc.coeffs[i];
      return;
    }
  }
}

Field step(const Field& u, double dt, const FluxSpec& flux, Scheme scheme, bool dealias,
           double blowup_factor) {
  if (!(dt >= 0.0)) throw ConfigError("step: dt must be >= 0");
  if (dt == 0.0) return u;
  const double guard = blowup_factor * std::max(linf_norm(u), 1e-300);
  Stepper stepper(u.grid, dt, scheme, flux, dealias, guard);
  SpectralField U = forward_transform(u);
  stepper.step(U, 0.0);
  return inverse_transform(U);
}

Trajectory integrate(const Field& u0, const IntegratorConfig& cfg, const FluxSpec& flux) {
  cfg.validate();
  if (!u0.finite()) throw NumericalError("integrate: initial data contains NaN/Inf");

  Trajectory traj(u0.grid);
  traj.flux_name = flux.name;

  const double guard = cfg.blowup_factor * std::max(linf_norm(u0), 1e-300);
  Stepper stepper(u0.grid, cfg.dt, cfg.scheme, flux, cfg.dealias, guard);

  SpectralField U = forward_transform(u0);
  const long n_steps = static_cast<long>(std::llround(cfg.t_end / cfg.dt));
  if (std::abs(n_steps * cfg.dt - cfg.t_end) > 1e-9 * (1.0 + cfg.t_end))
    throw ConfigError("integrate: t_end must be an integer multiple of dt");

  std::size_t next_out = 0;
  const auto& outs = cfg.output_times;
  auto record = [&](double t) {
    Field u = inverse_transform(U);
    Trajectory::Snapshot snap{t, std::move(u), 0.0, 0.0, 0.0};
    snap.mass = u0.grid.cell_volume() * U.coeffs[0].real();
    double lo = snap.u.values[0], hi = snap.u.values[0];
    for (double v : snap.u.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    snap.min_value = lo;
    snap.max_value = hi;
    traj.snapshots.push_back(std::move(snap));
  };

  for (long m = 0; m <= n_steps; ++m) {
    const double t = m * cfg.dt;
    bool due = false;
    while (next_out < outs.size() && outs[next_out] <= t + 1e-9 * (1.0 + t)) {
      due = true;  // several requested times inside one step collapse to one snapshot
      ++next_out;
    }
    if (due) record(t);
    if (m == n_steps) break;
    try {
      stepper.step(U, t);
    } catch (RegimeError& e) {
      throw RegimeError(std::string(e.what()) + " [at t=" + std::to_string(t) + "]", t);
    }
    ++traj.steps_taken;
  }
  if (next_out < outs.size())
    throw ConfigError("integrate: not all output times were reached");
  return traj;
}

}  // namespace radgas
