#include "radgas/field.hpp"

#include <cmath>
#include <string>

#include "radgas/errors.hpp"

namespace radgas {

Field::Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.total_points())
    throw ConfigError("field length " + std::to_string(values.size()) +
                      " does not match grid point count " +
                      std::to_string(grid.total_points()));
}

SpectralField::SpectralField(const Grid& g, std::vector<std::complex<double>> c)
    : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.total_points())
    throw ConfigError("spectral field length does not match grid point count");
}

bool Field::finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {
void require_same_grid(const Grid& a, const Grid& b) {
  if (a != b) throw ConfigError("fields live on different grids");
}
}  // namespace

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a.grid, b.grid);
  Field out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  return out;
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a.grid, b.grid);
  Field out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = a.values[i] - b.values[i];
  return out;
}

Field operator*(double s, const Field& a) {
  Field out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = s * a.values[i];
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid, b.grid);
  SpectralField out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  return out;
}

}  // namespace radgas
