#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace radgas {

/// Uniform periodic grid on [0,L)^n with N samples per axis.
///
/// Physical nodes sit at x_i = i*dx, dx = L/N.  The frequency lattice is
/// xi_k = 2*pi*k/L with k in the symmetric range [-N/2, N/2), stored in the
/// usual DFT order k = 0, 1, ..., N/2-1, -N/2, ..., -1.  N must be even so
/// the lattice is closed under negation (Nyquist maps to itself).
class Grid {
 public:
  Grid(int dim, int points_per_axis, double box_length);

  int dim() const { return dim_; }
  int points_per_axis() const { return points_; }
  double box_length() const { return length_; }
  double dx() const { return dx_; }
  std::size_t total_points() const { return total_; }
  /// Quadrature weight dx^n of one grid cell.
  double cell_volume() const { return cell_volume_; }

  /// Signed integer wavenumber for DFT index i in [0,N).
  int wave_index(int i) const { return i <= points_ / 2 - 1 ? i : i - points_; }
  /// Frequency xi = 2*pi*k/L for DFT index i.
  double xi(int i) const { return two_pi_over_length_ * wave_index(i); }
  /// True when DFT index i is the (self-conjugate) Nyquist mode.
  bool is_nyquist(int i) const { return 2 * i == points_; }

  /// Per-axis extents as a fixed array, axes beyond dim() have size 1,
  /// so nested triple loops cover every dimensionality uniformly.
  std::array<int, 3> extents() const;

  /// Decompose a flat row-major index into per-axis DFT indices.
  std::array<int, 3> unflatten(std::size_t flat) const;

  /// Physical coordinate of node index i along one axis.
  double coord(int i) const { return dx_ * i; }

  bool operator==(const Grid& other) const {
    return dim_ == other.dim_ && points_ == other.points_ && length_ == other.length_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  int dim_;
  int points_;
  double length_;
  double dx_;
  double two_pi_over_length_;
  double cell_volume_;
  std::size_t total_;
};

}  // namespace radgas
