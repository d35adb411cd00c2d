#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/integrator.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"
#include "radgas/symbols.hpp"
#include "test_support.hpp"

using namespace radgas;
using radgas::test::gaussian_field;
using radgas::test::random_field;
using radgas::test::rel_l2_error;

TEST_CASE("flux specs vanish to second order at zero") {
  for (const FluxSpec& f : {burgers_flux(2), polynomial_flux(2, {0.3, -1.0}, {0.1, 2.0})}) {
    for (int j = 0; j < f.axes(); ++j) {
      CHECK(f.eval(j, 0.0) == 0.0);
      CHECK(f.deriv(j, 0.0) == 0.0);
    }
  }
  CHECK(burgers_flux(3).isotropic());
  CHECK(zero_flux(2).is_zero());
}

TEST_CASE("recover_q: constants, single mode, defining identity") {
  Grid g(1, 64, 2 * M_PI);

  Field c(g);
  for (auto& v : c.values) v = 2.0;
  VectorField qc = recover_q(c);
  CHECK(linf_norm(qc[0]) < 1e-14);

  // u = sin(x): q1 = -cos(x)/2 (the mode |xi| = 1 sees 1/(1+1))
  Field s(g);
  for (int i = 0; i < 64; ++i) s.values[i] = std::sin(g.coord(i));
  VectorField q = recover_q(s);
  Field expected(g);
  for (int i = 0; i < 64; ++i) expected.values[i] = -0.5 * std::cos(g.coord(i));
  CHECK(rel_l2_error(q[0], expected) < 1e-12);

  // (1-Delta) q + grad u = 0 pointwise on random data
  for (int n = 1; n <= 3; ++n) {
    Grid gn(n, n == 3 ? 16 : 64, 7.0);
    Field u = random_field(gn, 40 + n);
    VectorField qq = recover_q(u);
    VectorField gu = gradient(u);
    for (int j = 0; j < n; ++j) {
      Field residual = qq[j] - laplacian(qq[j]) + gu[j];
      CHECK(linf_norm(residual) < 1e-11 * std::max(1.0, linf_norm(gu[j])));
    }
  }
}

TEST_CASE("div_q: formula and two-path agreement") {
  Grid g(1, 64, 2 * M_PI);
  Field c(g);
  for (auto& v : c.values) v = -1.0;
  CHECK(linf_norm(div_q(c)) < 1e-14);

  // u = sin(x): div q = sin(x)/2
  Field s(g);
  for (int i = 0; i < 64; ++i) s.values[i] = std::sin(g.coord(i));
  Field d = div_q(s);
  CHECK(rel_l2_error(d, 0.5 * s) < 1e-12);

  for (int n = 1; n <= 3; ++n) {
    Grid gn(n, n == 3 ? 16 : 32, 9.0);
    Field u = random_field(gn, 60 + n);
    CHECK(rel_l2_error(div_q(u), divergence(recover_q(u))) < 1e-12);
  }
}

TEST_CASE("rhs_decoupled: zero, constants, single-mode linearization") {
  Grid g(1, 64, 2 * M_PI);
  const FluxSpec flux = burgers_flux(1);

  Field zero(g);
  CHECK(linf_norm(rhs_decoupled(zero, flux)) == 0.0);

  Field c(g);
  for (auto& v : c.values) v = 0.37;
  CHECK(linf_norm(rhs_decoupled(c, flux)) < 1e-14);  // constants are steady

  // u = eps cos(x): rhs = -eps/2 cos(x) + O(eps^2), symbol -|xi|^2/(1+|xi|^2) at |xi|=1
  const double eps = 1e-6;
  Field mode(g);
  for (int i = 0; i < 64; ++i) mode.values[i] = eps * std::cos(g.coord(i));
  Field rhs = rhs_decoupled(mode, flux);
  Field lin = -0.5 * mode;
  CHECK(l2_norm(rhs - lin) < 10 * eps * eps);
}

TEST_CASE("small-amplitude linearization quadratic in amplitude") {
  Grid g(1, 128, 20.0);
  const FluxSpec flux = burgers_flux(1);
  Field shape = gaussian_field(g, 1.0, 1.5);
  const FluxSpec none = zero_flux(1);
  std::vector<double> eps{1e-3, 1e-4, 1e-5};
  std::vector<double> err;
  for (double e : eps) {
    Field u = e * shape;
    err.push_back(l2_norm(rhs_decoupled(u, flux) - rhs_decoupled(u, none)));
  }
  // log-log slope 2 +- 0.1 across successive decades
  for (std::size_t i = 1; i < eps.size(); ++i) {
    const double slope = std::log(err[i - 1] / err[i]) / std::log(eps[i - 1] / eps[i]);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("coupled residual: zero triple and equivalence witness") {
  Grid g(2, 32, 6.0);
  const FluxSpec flux = burgers_flux(2);

  Field zero(g);
  VectorField qzero(g);
  auto res0 = coupled_residual(zero, zero, qzero, flux);
  CHECK(linf_norm(res0.r1) == 0.0);
  for (int j = 0; j < 2; ++j) CHECK(linf_norm(res0.r2[j]) == 0.0);

  // decoupled triple: q = recover_q(u), u_t = -div f(u) - div q
  for (int n = 1; n <= 2; ++n) {
    Grid gn(n, 64, 8.0);
    const FluxSpec fn = burgers_flux(n);
    Field u = random_field(gn, 80 + n, 0.5);
    VectorField q = recover_q(u);
    Field divf = flux_divergence(u, fn);
    Field dq = divergence(q);
    Field u_t(gn);
    for (std::size_t i = 0; i < u.size(); ++i)
      u_t.values[i] = -divf.values[i] - dq.values[i];
    auto res = coupled_residual(u, u_t, q, fn);
    const double scale = std::max(1.0, l2_norm(u));
    CHECK(l2_norm(res.r1) < 1e-10 * scale);
    for (int j = 0; j < n; ++j) CHECK(l2_norm(res.r2[j]) < 1e-10 * scale);
  }
}

TEST_CASE("mass: exact values and quadrature") {
  Grid g(2, 32, 4.0);
  Field ones(g);
  for (auto& v : ones.values) v = 1.0;
  CHECK(mass(ones) == doctest::Approx(16.0).epsilon(1e-14));  // L^n = 4^2

  // normalized Gaussian integrates to ~1 (well-resolved width)
  Grid g1(1, 256, 40.0);
  const double w = 1.5;
  Field gauss = gaussian_field(g1, 1.0 / (w * std::sqrt(2 * M_PI)), w);
  CHECK(std::abs(mass(gauss) - 1.0) < 1e-10);
}

TEST_CASE("elliptic kernel K: unit mass and positivity spot check") {
  // Unit mass is the symbol at xi = 0.
  CHECK(helmholtz_inverse_symbol().at_zero() == doctest::Approx(1.0));
  // Positivity: the raw kernel has a singularity at 0 (kink in 1d, log in
  // 2d), so its truncated spectral image rings at the grid scale.  Check the
  // mollified kernel K * G0(eps) instead -- positive as a convolution of
  // positive kernels, and spectrally convergent.
  for (int n : {1, 2}) {
    Grid g(n, n == 1 ? 512 : 128, 40.0);
    const double xi_max = M_PI / g.dx();
    const double eps = 14.0 / (xi_max * xi_max);  // ringing below ~1e-6
    SpectralField K(g);
    for (std::size_t i = 0; i < K.size(); ++i) {
      const double s = mode_xi_sq(g, i);
      K.coeffs[i] = std::exp(-eps * s) / (1.0 + s);
    }
    Field k = inverse_transform(K);
    double min_v = 0.0;
    for (double v : k.values) min_v = std::min(min_v, v);
    const double peak = linf_norm(k);
    CHECK(min_v > -1e-6 * peak);
  }
}

TEST_CASE("blow-up guard raises a regime error") {
  Grid g(1, 128, 30.0);
  Field big = gaussian_field(g, 10.0, 2.0);  // order-10 data steepens fast
  IntegratorConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 40.0;
  cfg.output_times = {0.0, 40.0};
  cfg.blowup_factor = 1.05;  // tight guard: any growth in max trips it
  CHECK_THROWS_AS(integrate(big, cfg, burgers_flux(1)), RegimeError);
}

TEST_CASE("L1 contraction along a short nonlinear run") {
  Grid g(1, 256, 80.0);
  Field u0 = gaussian_field(g, 0.05, 2.0);
  IntegratorConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 10.0;
  for (double t = 0.0; t <= 10.0 + 1e-9; t += 0.5) cfg.output_times.push_back(t);
  Trajectory traj = integrate(u0, cfg, burgers_flux(1));
  const double l1_0 = l1_norm(traj.snapshots.front().u);
  double prev = l1_0;
  for (const auto& snap : traj.snapshots) {
    const double cur = l1_norm(snap.u);
    CHECK(cur <= prev + 1e-8 * l1_0 * 0.5);
    prev = cur;
  }
}

TEST_CASE("model state bundles q and mass") {
  Grid g(1, 64, 10.0);
  Field u = gaussian_field(g, 0.1, 1.0);
  ModelState st = make_state(1.5, u);
  CHECK(st.t == 1.5);
  CHECK(st.total_mass == doctest::Approx(mass(u)));
  CHECK(rel_l2_error(st.q[0], recover_q(u)[0]) == 0.0);
}
