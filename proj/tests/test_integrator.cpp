#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/integrator.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/propagators.hpp"
#include "test_support.hpp"

using namespace radgas;
using radgas::test::gaussian_field;
using radgas::test::random_field;
using radgas::test::rel_l2_error;

TEST_CASE("phi functions match closed forms across the branch switch") {
  // The recursion references (phi_j - 1/j!)/z cancel catastrophically for
  // tiny |z|, so check them only where they are well conditioned.
  for (double z : {-1e-3, -0.4999, -0.5001, -0.9, -0.05}) {
    const double p1 = phi1(z);
    const double p2 = phi2(z);
    const double p3 = phi3(z);
    CHECK(p2 == doctest::Approx((p1 - 1.0) / z).epsilon(1e-10));
    CHECK(p3 == doctest::Approx((p2 - 0.5) / z).epsilon(1e-9));
    CHECK(std::abs(std::exp(z) - (1.0 + z * p1)) < 1e-15);
  }
  // Tiny |z|: compare against leading Taylor terms directly.
  for (double z : {-1e-9, -1e-6}) {
    CHECK(phi1(z) == doctest::Approx(1.0 + z / 2.0 + z * z / 6.0).epsilon(1e-15));
    CHECK(phi2(z) == doctest::Approx(0.5 + z / 6.0 + z * z / 24.0).epsilon(1e-15));
    CHECK(phi3(z) == doctest::Approx(1.0 / 6.0 + z / 24.0 + z * z / 120.0).epsilon(1e-15));
  }
  CHECK(phi1(0.0) == doctest::Approx(1.0));
  CHECK(phi2(0.0) == doctest::Approx(0.5));
  CHECK(phi3(0.0) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("zero flux: one step equals the exact semigroup") {
  Grid g(1, 128, 20.0);
  Field u = random_field(g, 3, 0.3);
  for (Scheme s : {Scheme::ExpEuler, Scheme::ExpRK2, Scheme::ExpRK4}) {
    Field stepped = step(u, 0.25, zero_flux(1), s);
    CHECK(rel_l2_error(stepped, propagate_G(u, 0.25)) < 1e-14);
  }
}

TEST_CASE("dt = 0 is the identity") {
  Grid g(1, 64, 10.0);
  Field u = random_field(g, 4, 0.2);
  Field same = step(u, 0.0, burgers_flux(1), Scheme::ExpRK4);
  CHECK(rel_l2_error(same, u) == 0.0);
}

TEST_CASE("convergence orders: exp-Euler 1, exp-RK2 2, exp-RK4 4") {
  Grid g(1, 256, 60.0);
  Field u0 = gaussian_field(g, 0.25, 2.0);
  const FluxSpec flux = burgers_flux(1);
  const double T = 2.0;

  auto run_to_T = [&](double dt, Scheme s) {
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.t_end = T;
    cfg.scheme = s;
    cfg.output_times = {T};
    return integrate(u0, cfg, flux).snapshots.back().u;
  };

  for (auto [scheme, order] : std::vector<std::pair<Scheme, double>>{
           {Scheme::ExpEuler, 1.0}, {Scheme::ExpRK2, 2.0}, {Scheme::ExpRK4, 4.0}}) {
    const Field ref = run_to_T(T / 2048, scheme == Scheme::ExpEuler ? Scheme::ExpRK4 : scheme);
    std::vector<double> dts{0.2, 0.1, 0.05};
    std::vector<double> errs;
    for (double dt : dts) errs.push_back(l2_norm(run_to_T(dt, scheme) - ref));
    for (std::size_t i = 1; i < dts.size(); ++i) {
      const double slope = std::log(errs[i - 1] / errs[i]) / std::log(dts[i - 1] / dts[i]);
      CHECK(slope == doctest::Approx(order).epsilon(0.2 / order));
    }
  }
}

TEST_CASE("linear trajectory matches propagate_G at every output time") {
  Grid g(2, 64, 30.0);
  Field u0 = gaussian_field(g, 0.4, 2.0);
  IntegratorConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 5.0;
  cfg.output_times = {0.0, 1.0, 2.5, 5.0};
  Trajectory traj = integrate(u0, cfg, zero_flux(2));
  for (const auto& snap : traj.snapshots)
    CHECK(rel_l2_error(snap.u, propagate_G(u0, snap.t)) < 1e-12);
}

TEST_CASE("zero data stays zero") {
  Grid g(1, 64, 10.0);
  Field zero(g);
  IntegratorConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 2.0;
  cfg.output_times = {0.0, 2.0};
  Trajectory traj = integrate(zero, cfg, burgers_flux(1));
  for (const auto& snap : traj.snapshots) CHECK(linf_norm(snap.u) == 0.0);
}

TEST_CASE("small Gaussian Burgers run: L2 norm monotone decreasing") {
  Grid g(1, 512, 100.0);
  Field u0 = gaussian_field(g, 0.05, 2.0);
  IntegratorConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 20.0;
  for (double t = 0.0; t <= 20.0 + 1e-9; t += 1.0) cfg.output_times.push_back(t);
  Trajectory traj = integrate(u0, cfg, burgers_flux(1));
  double prev = 1e300;
  for (const auto& snap : traj.snapshots) {
    const double cur = l2_norm(snap.u);
    CHECK(cur <= prev * (1 + 1e-13));
    prev = cur;
  }
  // H1 non-increasing as well (linear dissipation dominates for small data)
  prev = 1e300;
  for (const auto& snap : traj.snapshots) {
    const double cur = sobolev_norm(snap.u, 1);
    CHECK(cur <= prev * (1 + 1e-13));
    prev = cur;
  }
}

TEST_CASE("mass invariant per step to rounding") {
  Grid g(2, 64, 40.0);
  Field u0 = gaussian_field(g, 0.1, 2.5);
  const double M0 = mass(u0);
  IntegratorConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 8.0;
  for (double t = 0.0; t <= 8.0 + 1e-9; t += 0.5) cfg.output_times.push_back(t);
  Trajectory traj = integrate(u0, cfg, burgers_flux(2));
  for (const auto& snap : traj.snapshots)
    CHECK(std::abs(snap.mass - M0) <= 1e-13 * (1.0 + std::abs(M0)));
}

TEST_CASE("trajectory residual shrinks at second order in dt (exp-RK2)") {
  Grid g(1, 256, 60.0);
  Field u0 = gaussian_field(g, 0.2, 2.0);
  const FluxSpec flux = burgers_flux(1);
  const double t_probe = 1.0;

  // Insert (u, centered-difference u_t, recover_q(u)) into the coupled
  // residual; both the scheme deviation and the finite difference are
  // O(dt^2), so the residual must shrink at slope ~2.
  auto residual_at = [&](double dt) {
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.scheme = Scheme::ExpRK2;
    cfg.t_end = t_probe + dt;
    cfg.output_times = {t_probe - dt, t_probe, t_probe + dt};
    Trajectory traj = integrate(u0, cfg, flux);
    const Field& um = traj.snapshots[0].u;
    const Field& uc = traj.snapshots[1].u;
    const Field& up = traj.snapshots[2].u;
    Field u_t(g);
    for (std::size_t i = 0; i < u_t.size(); ++i)
      u_t.values[i] = (up.values[i] - um.values[i]) / (2 * dt);
    auto res = coupled_residual(uc, u_t, recover_q(uc), flux);
    double norm = l2_norm(res.r1);
    for (int j = 0; j < g.dim(); ++j) norm = std::max(norm, l2_norm(res.r2[j]));
    return norm;
  };

  const double r1 = residual_at(0.1);
  const double r2 = residual_at(0.05);
  const double r3 = residual_at(0.025);
  const double s12 = std::log2(r1 / r2);
  const double s23 = std::log2(r2 / r3);
  CHECK(s12 == doctest::Approx(2.0).epsilon(0.2));
  CHECK(s23 == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("integrator config validation") {
  IntegratorConfig cfg;
  cfg.dt = -0.1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.dt = 0.1;
  cfg.t_end = 1.0;
  cfg.output_times = {0.5, 0.4};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.output_times = {0.5, 2.0};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.output_times = {0.5, 1.0};
  CHECK_NOTHROW(cfg.validate());
  CHECK(scheme_from_name("exp-rk4") == Scheme::ExpRK4);
  CHECK_THROWS_AS(scheme_from_name("rk4"), ConfigError);
  CHECK(scheme_order(Scheme::ExpRK2) == 2);
}
