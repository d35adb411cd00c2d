#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"
#include "radgas/symbols.hpp"
#include "test_support.hpp"

using namespace radgas;
using radgas::test::gaussian_field;
using radgas::test::random_field;
using radgas::test::rel_l2_error;

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(Grid(0, 64, 1.0), ConfigError);
  CHECK_THROWS_AS(Grid(4, 64, 1.0), ConfigError);
  CHECK_THROWS_AS(Grid(1, 63, 1.0), ConfigError);  // odd N
  CHECK_THROWS_AS(Grid(1, 2, 1.0), ConfigError);   // N < 4
  CHECK_THROWS_AS(Grid(1, 64, -1.0), ConfigError);

  Grid g(2, 64, 8.0);
  CHECK(g.dx() == doctest::Approx(0.125));
  CHECK(g.dx() * g.points_per_axis() == doctest::Approx(8.0));
  CHECK(g.total_points() == 64 * 64);

  // Frequency lattice closed under negation: every nonzero non-Nyquist k has
  // a partner -k on the lattice.
  for (int i = 0; i < 64; ++i) {
    const int k = g.wave_index(i);
    if (g.is_nyquist(i)) {
      CHECK(k == -32);
      continue;
    }
    bool found = false;
    for (int j = 0; j < 64; ++j) found = found || g.wave_index(j) == -k;
    CHECK(found);
  }
}

TEST_CASE("forward transform: constant and single mode") {
  Grid g(1, 64, 2 * M_PI);
  Field ones(g);
  for (auto& v : ones.values) v = 1.0;
  SpectralField F = forward_transform(ones);
  CHECK(F.coeffs[0].real() == doctest::Approx(64.0));  // N^n with our convention
  for (std::size_t i = 1; i < F.size(); ++i) CHECK(std::abs(F.coeffs[i]) < 1e-12 * 64);

  Field c(g);
  for (int i = 0; i < 64; ++i) c.values[i] = std::cos(2 * M_PI * g.coord(i) / g.box_length());
  F = forward_transform(c);
  int nonzero = 0;
  for (std::size_t i = 0; i < F.size(); ++i)
    if (std::abs(F.coeffs[i]) > 1e-10 * 64) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(F.coeffs[1].real() == doctest::Approx(32.0));
  CHECK(F.coeffs[63].real() == doctest::Approx(32.0));
}

TEST_CASE("round trip inverse(forward) within 1e-12") {
  for (int n = 1; n <= 3; ++n) {
    Grid g(n, n == 3 ? 16 : 64, 5.0);
    Field f = random_field(g, 42 + n);
    Field back = inverse_transform(forward_transform(f));
    CHECK(rel_l2_error(back, f) < 1e-12);
  }
}

TEST_CASE("inverse transform rejects non-Hermitian coefficients") {
  Grid g(1, 32, 1.0);
  SpectralField F(g);
  F.coeffs[3] = {1.0, 0.5};  // no conjugate partner at -3
  CHECK_THROWS_AS(inverse_transform(F), SymmetryError);

  SpectralField zero(g);
  Field z = inverse_transform(zero);
  for (double v : z.values) CHECK(v == 0.0);
}

TEST_CASE("apply_multiplier: identity, eigenfunction, composition") {
  Grid g(2, 32, 2 * M_PI);
  Field f = random_field(g, 7);
  SpectralField F = forward_transform(f);

  SpectralField same = apply_multiplier(F, identity_symbol());
  CHECK(rel_l2_error(same, F) == 0.0);

  // single mode e^{i k.x}: scaling by 1/(1+|k|^2)
  Field mode(g);
  for (std::size_t i = 0; i < mode.size(); ++i) {
    const auto idx = g.unflatten(i);
    mode.values[i] = std::cos(2.0 * g.coord(idx[0]) + g.coord(idx[1]));  // k=(2,1)
  }
  Field scaled = inverse_transform(apply_multiplier(forward_transform(mode),
                                                    helmholtz_inverse_symbol()));
  const double factor = 1.0 / (1.0 + 5.0);
  CHECK(rel_l2_error(scaled, factor * mode) < 1e-12);

  // m1 then m2 equals m1*m2 in one pass
  PropagatorSymbol m1 = helmholtz_inverse_symbol();
  PropagatorSymbol m2 = semigroup_symbol(0.7);
  PropagatorSymbol prod{"m1*m2", [&](double s) { return m1.eval(s) * m2.eval(s); }};
  SpectralField two_pass = apply_multiplier(apply_multiplier(F, m1), m2);
  SpectralField one_pass = apply_multiplier(F, prod);
  CHECK(rel_l2_error(two_pass, one_pass) < 1e-13);
}

TEST_CASE("real even symbols preserve realness") {
  Grid g(2, 32, 3.0);
  Field f = random_field(g, 9);
  SpectralField F = apply_multiplier(forward_transform(f), semigroup_symbol(2.0));
  CHECK_NOTHROW(inverse_transform(F));  // imag residue below threshold
}

TEST_CASE("gradient, divergence, laplacian") {
  Grid g(2, 64, 2 * M_PI);

  Field c(g);
  for (auto& v : c.values) v = 3.5;
  VectorField gr = gradient(c);
  for (int j = 0; j < 2; ++j) CHECK(linf_norm(gr[j]) < 1e-13);

  // laplacian eigenfunction sin(2 pi x / L) with L = 2 pi: eigenvalue -1
  Grid g1(1, 64, 2 * M_PI);
  Field s1(g1);
  for (int i = 0; i < 64; ++i) s1.values[i] = std::sin(g1.coord(i));
  Field lap = laplacian(s1);
  CHECK(rel_l2_error(lap, -1.0 * s1) < 1e-12);

  // div(grad f) = laplacian f on random band-limited data
  for (int n = 1; n <= 3; ++n) {
    Grid gn(n, n == 3 ? 16 : 64, 5.0);
    Field f = random_field(gn, 100 + n);
    CHECK(rel_l2_error(divergence(gradient(f)), laplacian(f)) < 1e-12);
  }
}

TEST_CASE("linearity of differential operators") {
  Grid g(2, 32, 4.0);
  Field f = random_field(g, 11), h = random_field(g, 12);
  const double a = 1.7, b = -0.3;
  Field combo = a * f + b * h;
  Field lhs = laplacian(combo);
  Field rhs = a * laplacian(f) + b * laplacian(h);
  CHECK(rel_l2_error(lhs, rhs) < 1e-12);
}

TEST_CASE("Parseval: field and spectral L2 agree") {
  for (int n = 1; n <= 3; ++n) {
    Grid g(n, n == 3 ? 16 : 64, 3.0);
    Field f = random_field(g, 200 + n);
    const double a = l2_norm(f);
    const double b = l2_norm(forward_transform(f));
    CHECK(std::abs(a - b) < 1e-12 * a);
  }
}

TEST_CASE("differentiation commutes with helmholtz inverse") {
  Grid g(2, 32, 5.0);
  Field f = random_field(g, 31);
  SpectralField F = forward_transform(f);
  SpectralField path1 = apply_multiplier(derivative_spectral(F, 0), helmholtz_inverse_symbol());
  SpectralField path2 = derivative_spectral(apply_multiplier(F, helmholtz_inverse_symbol()), 0);
  CHECK(rel_l2_error(path1, path2) < 1e-12);
}

TEST_CASE("dealias zeroes the top third of modes") {
  Grid g(1, 48, 1.0);
  SpectralField F(g);
  for (auto& z : F.coeffs) z = 1.0;
  dealias_inplace(F);
  for (int i = 0; i < 48; ++i) {
    const int k = std::abs(g.wave_index(i));
    if (k > 16) CHECK(F.coeffs[i] == std::complex<double>(0.0));
    else CHECK(F.coeffs[i] == std::complex<double>(1.0));
  }
}

TEST_CASE("symbol reports its value at xi = 0") {
  CHECK(semigroup_symbol(3.0).at_zero() == doctest::Approx(1.0));
  CHECK(helmholtz_inverse_symbol().at_zero() == doctest::Approx(1.0));  // unit-mass kernel
  CHECK(laplacian_symbol().at_zero() == doctest::Approx(0.0));
}
