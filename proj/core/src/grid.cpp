#include "radgas/grid.hpp"

#include <cmath>
#include <string>

#include "radgas/errors.hpp"

namespace radgas {

Grid::Grid(int dim, int points_per_axis, double box_length)
    : dim_(dim), points_(points_per_axis), length_(box_length) {
  if (dim < 1 || dim > 3)
    throw ConfigError("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  if (points_ < 4 || points_ % 2 != 0)
    throw ConfigError("grid points per axis must be even and >= 4, got " +
                      std::to_string(points_));
  if (!(length_ > 0.0) || !std::isfinite(length_))
    throw ConfigError("grid box length must be positive and finite");
  dx_ = length_ / points_;
  two_pi_over_length_ = 2.0 * M_PI / length_;
  cell_volume_ = std::pow(dx_, dim_);
  total_ = 1;
  for (int d = 0; d < dim_; ++d) total_ *= static_cast<std::size_t>(points_);
}

std::array<int, 3> Grid::extents() const {
  std::array<int, 3> e{1, 1, 1};
  for (int d = 0; d < dim_; ++d) e[d] = points_;
  return e;
}

std::array<int, 3> Grid::unflatten(std::size_t flat) const {
  // Row-major: flat = (i0*N + i1)*N + i2 for the axes that exist.
  std::array<int, 3> idx{0, 0, 0};
  const auto e = extents();
  idx[2] = static_cast<int>(flat % e[2]);
  flat /= e[2];
  idx[1] = static_cast<int>(flat % e[1]);
  flat /= e[1];
  idx[0] = static_cast<int>(flat);
  return idx;
}

}  // namespace radgas
