#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "radgas/field.hpp"

namespace radgas {

/// One Gaussian bump amplitude * exp(-|x-c|^2 / (2 width^2)), with the
/// center offset c measured from the box center.
struct GaussianSpec {
  double amplitude = 1.0;
  double width = 1.0;
  std::array<double, 3> center{0.0, 0.0, 0.0};
};

/// Named initial-data families selectable from the config file.
struct InitialDataSpec {
  enum class Kind { Gaussian, GaussianMixture, BandLimitedRandom, DerivativeOfGaussian };
  Kind kind = Kind::Gaussian;

  std::vector<GaussianSpec> bumps;  // Gaussian uses bumps[0]; mixture uses all
  // derivative_of_gaussian: d/dx_axis of bumps[0]; exact zero discrete mass.
  int axis = 0;
  // band_limited_random
  std::uint64_t seed = 1;
  int band = 8;
  double amplitude = 1.0;

  /// Largest |x - center| (plus two widths) carrying appreciable data;
  /// feeds the box-validity horizon.
  double support_radius() const;
  /// Smallest Gaussian width, 0 for random data (no width constraint).
  double min_width() const;
  bool zero_mass_by_construction() const;

  static InitialDataSpec gaussian(double amplitude, double width,
                                  std::array<double, 3> center = {0, 0, 0});
  static InitialDataSpec mixture(std::vector<GaussianSpec> bumps);
  static InitialDataSpec derivative_of_gaussian(double amplitude, double width, int axis = 0);
  static InitialDataSpec band_limited_random(std::uint64_t seed, int band, double amplitude);
};

/// Sample the spec on a grid.  Random data is deterministic in the seed.
Field build_initial_data(const InitialDataSpec& spec, const Grid& grid);

/// Standalone band-limited random field (also used by tests): Hermitian
/// random modes with 1 <= max_j |k_j| <= band, zero mass, unit-scaled by
/// `amplitude` in L-infinity.
Field random_band_limited(const Grid& grid, std::uint64_t seed, int band, double amplitude);

}  // namespace radgas
