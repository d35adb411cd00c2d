#include "radgas/initial_data.hpp"

#include <cmath>
#include <random>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/norms.hpp"

namespace radgas {

double InitialDataSpec::support_radius() const {
  if (kind == Kind::BandLimitedRandom) return 0.0;  // fills the whole box
  double r = 0.0;
  for (const auto& b : bumps) {
    double c = 0.0;
    for (double x : b.center) c += x * x;
    r = std::max(r, std::sqrt(c) + 2.0 * b.width);
  }
  return r;
}

double InitialDataSpec::min_width() const {
  if (kind == Kind::BandLimitedRandom || bumps.empty()) return 0.0;
  double w = bumps.front().width;
  for (const auto& b : bumps) w = std::min(w, b.width);
  return w;
}

bool InitialDataSpec::zero_mass_by_construction() const {
  return kind == Kind::DerivativeOfGaussian || kind == Kind::BandLimitedRandom;
}

InitialDataSpec InitialDataSpec::gaussian(double amplitude, double width,
                                          std::array<double, 3> center) {
  InitialDataSpec s;
  s.kind = Kind::Gaussian;
  s.bumps = {GaussianSpec{amplitude, width, center}};
  return s;
}

InitialDataSpec InitialDataSpec::mixture(std::vector<GaussianSpec> bumps) {
  InitialDataSpec s;
  s.kind = Kind::GaussianMixture;
  s.bumps = std::move(bumps);
  return s;
}

InitialDataSpec InitialDataSpec::derivative_of_gaussian(double amplitude, double width,
                                                        int axis) {
  InitialDataSpec s;
  s.kind = Kind::DerivativeOfGaussian;
  s.bumps = {GaussianSpec{amplitude, width, {0, 0, 0}}};
  s.axis = axis;
  return s;
}

InitialDataSpec InitialDataSpec::band_limited_random(std::uint64_t seed, int band,
                                                     double amplitude) {
  InitialDataSpec s;
  s.kind = Kind::BandLimitedRandom;
  s.seed = seed;
  s.band = band;
  s.amplitude = amplitude;
  return s;
}

namespace {

// Deterministic standard normal: Box-Muller over mt19937_64 uniforms, so the
// stream does not depend on the standard library's distribution internals.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() {
    return (rng_() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
  }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_ = false;
};

Field sample_bumps(const InitialDataSpec& spec, const Grid& grid) {
  Field out(grid);
  const double ctr = 0.5 * grid.box_length();
  const bool derivative = spec.kind == InitialDataSpec::Kind::DerivativeOfGaussian;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto idx = grid.unflatten(flat);
    double v = 0.0;
    for (const auto& b : spec.bumps) {
      double r2 = 0.0;
      double x_axis = 0.0;
      for (int d = 0; d < grid.dim(); ++d) {
        const double x = grid.coord(idx[d]) - ctr - b.center[d];
        if (d == spec.axis) x_axis = x;
        r2 += x * x;
      }
      const double w2 = b.width * b.width;
      double g = b.amplitude * std::exp(-r2 / (2.0 * w2));
      if (derivative) g *= -x_axis / w2;
      v += g;
    }
    out.values[flat] = v;
  }
  return out;
}

}  // namespace

Field random_band_limited(const Grid& grid, std::uint64_t seed, int band, double amplitude) {
  if (band < 1 || band >= grid.points_per_axis() / 2)
    throw ConfigError("random band must satisfy 1 <= band < N/2");
  SpectralField F(grid);
  NormalStream rng(seed);
  const auto e = grid.extents();
  // Walk the lattice in a fixed order; assign each (k,-k) pair once from the
  // canonical representative (first nonzero signed index positive).
  std::size_t flat = 0;
  for (int i0 = 0; i0 < e[0]; ++i0)
    for (int i1 = 0; i1 < e[1]; ++i1)
      for (int i2 = 0; i2 < e[2]; ++i2, ++flat) {
        const int k[3] = {grid.wave_index(i0), grid.dim() > 1 ? grid.wave_index(i1) : 0,
                          grid.dim() > 2 ? grid.wave_index(i2) : 0};
        int kmax = 0;
        for (int d = 0; d < 3; ++d) kmax = std::max(kmax, std::abs(k[d]));
        if (kmax < 1 || kmax > band) continue;
        int first_nonzero = 0;
        for (int d = 0; d < 3; ++d)
          if (k[d] != 0) {
            first_nonzero = k[d];
            break;
          }
        if (first_nonzero < 0) continue;  // the conjugate partner fills this one
        const std::complex<double> z(rng.next(), rng.next());
        F.coeffs[flat] = z;
        // conjugate partner at -k
        const int N = grid.points_per_axis();
        const int j0 = (N - i0) % N;
        const int j1 = (N - i1) % N;
        const int j2 = (N - i2) % N;
        std::size_t pflat = 0;
        if (grid.dim() == 1) pflat = j0;
        else if (grid.dim() == 2) pflat = static_cast<std::size_t>(j0) * N + j1;
        else pflat = (static_cast<std::size_t>(j0) * N + j1) * static_cast<std::size_t>(N) + j2;
        F.coeffs[pflat] = std::conj(z);
      }
  Field f = inverse_transform(F);
  const double peak = linf_norm(f);
  if (peak > 0.0) f = (amplitude / peak) * f;
  return f;
}

Field build_initial_data(const InitialDataSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case InitialDataSpec::Kind::Gaussian:
    case InitialDataSpec::Kind::GaussianMixture:
    case InitialDataSpec::Kind::DerivativeOfGaussian:
      if (spec.bumps.empty()) throw ConfigError("initial data needs at least one bump");
      return sample_bumps(spec, grid);
    case InitialDataSpec::Kind::BandLimitedRandom:
      return random_band_limited(grid, spec.seed, spec.band, spec.amplitude);
  }
  throw ConfigError("unknown initial data kind");
}

}  // namespace radgas
