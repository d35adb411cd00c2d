#include "radgas/norms.hpp"

#include <cmath>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/operators.hpp"

namespace radgas {

namespace {

struct KahanAcc {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Reduce term(xi_sq, |coeff|^2) over the lattice with per-axis xi^2 tables.
template <typename Term>
double reduce_spectrum(const SpectralField& U, Term&& term) {
  const Grid& g = U.grid;
  const int n = g.points_per_axis();
  std::vector<double> xi2(n);
  for (int i = 0; i < n; ++i) xi2[i] = g.xi(i) * g.xi(i);
  KahanAcc acc;
  switch (g.dim()) {
    case 1:
      for (int i = 0; i < n; ++i) acc.add(term(xi2[i], std::norm(U.coeffs[i])));
      break;
    case 2:
      for (int i0 = 0; i0 < n; ++i0) {
        const auto* row = U.coeffs.data() + static_cast<std::size_t>(i0) * n;
        for (int i1 = 0; i1 < n; ++i1) acc.add(term(xi2[i0] + xi2[i1], std::norm(row[i1])));
      }
      break;
    default:
      for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1) {
          const double s01 = xi2[i0] + xi2[i1];
          const auto* row = U.coeffs.data() + (static_cast<std::size_t>(i0) * n + i1) * n;
          for (int i2 = 0; i2 < n; ++i2) acc.add(term(s01 + xi2[i2], std::norm(row[i2])));
        }
  }
  return acc.sum;
}

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// 1 + s + s^2 + ... + s^order (the H^s multiplier weight).
double hs_weight(double s, int order) {
  double w = 1.0, pw = 1.0;
  for (int k = 1; k <= order; ++k) {
    pw *= s;
    w += pw;
  }
  return w;
}

double spectral_scale(const Grid& g) {
  return g.cell_volume() / static_cast<double>(g.total_points());
}

}  // namespace

double stable_sum(const std::vector<double>& terms) {
  KahanAcc acc;
  for (double v : terms) acc.add(v);
  return acc.sum;
}

double l1_norm(const Field& u) {
  KahanAcc acc;
  for (double v : u.values) acc.add(std::abs(v));
  return u.grid.cell_volume() * acc.sum;
}

double l2_norm(const Field& u) {
  KahanAcc acc;
  for (double v : u.values) acc.add(v * v);
  return std::sqrt(u.grid.cell_volume() * acc.sum);
}

double linf_norm(const Field& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::abs(v));
  return m;
}

double weighted_l1_norm(const Field& u, double gamma) {
  if (gamma < 0.0) throw ConfigError("weighted_l1_norm: gamma must be >= 0");
  const Grid& g = u.grid;
  const double ctr = 0.5 * g.box_length();
  KahanAcc acc;
  for (std::size_t flat = 0; flat < u.size(); ++flat) {
    const auto idx = g.unflatten(flat);
    double r2 = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      const double x = g.coord(idx[d]) - ctr;
      r2 += x * x;
    }
    acc.add(std::pow(1.0 + std::sqrt(r2), gamma) * std::abs(u.values[flat]));
  }
  return g.cell_volume() * acc.sum;
}

double l2_norm(const SpectralField& U) {
  return std::sqrt(spectral_scale(U.grid) *
                   reduce_spectrum(U, [](double, double p) { return p; }));
}

double derivative_seminorm(const SpectralField& U, int k) {
  if (k < 0) throw ConfigError("derivative order must be >= 0");
  return std::sqrt(spectral_scale(U.grid) * reduce_spectrum(U, [k](double s, double p) {
                     return int_pow(s, k) * p;
                   }));
}

double derivative_seminorm(const Field& u, int k) {
  return derivative_seminorm(forward_transform(u), k);
}

double sobolev_norm(const SpectralField& U, int s) {
  if (s < 0) throw ConfigError("sobolev order must be >= 0");
  return std::sqrt(spectral_scale(U.grid) * reduce_spectrum(U, [s](double sq, double p) {
                     return hs_weight(sq, s) * p;
                   }));
}

double sobolev_norm(const Field& u, int s) { return sobolev_norm(forward_transform(u), s); }

double q_derivative_seminorm(const SpectralField& U, int k) {
  return std::sqrt(spectral_scale(U.grid) * reduce_spectrum(U, [k](double sq, double p) {
                     const double qf = sq / ((1.0 + sq) * (1.0 + sq));
                     return int_pow(sq, k) * qf * p;
                   }));
}

double q_sobolev_norm(const SpectralField& U, int s) {
  return std::sqrt(spectral_scale(U.grid) * reduce_spectrum(U, [s](double sq, double p) {
                     const double qf = sq / ((1.0 + sq) * (1.0 + sq));
                     return hs_weight(sq, s) * qf * p;
                   }));
}

double linf_norm(const VectorField& v) {
  double m = 0.0;
  for (const auto& c : v.components) m = std::max(m, linf_norm(c));
  return m;
}

double sobolev_norm(const VectorField& v, int s) {
  double acc = 0.0;
  for (const auto& c : v.components) {
    const double nrm = sobolev_norm(c, s);
    acc += nrm * nrm;
  }
  return std::sqrt(acc);
}

}  // namespace radgas
