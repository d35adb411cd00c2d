#include "radgas/flux.hpp"

#include <cmath>

#include "radgas/errors.hpp"

namespace radgas {

bool FluxSpec::is_zero() const {
  for (double a : quad)
    if (a != 0.0) return false;
  for (double b : cubic)
    if (b != 0.0) return false;
  return true;
}

bool FluxSpec::isotropic() const {
  for (int j = 1; j < axes(); ++j)
    if (quad[j] != quad[0] || cubic[j] != cubic[0]) return false;
  return true;
}

FluxSpec burgers_flux(int dim) {
  return {"burgers", std::vector<double>(dim, 0.5), std::vector<double>(dim, 0.0)};
}

FluxSpec polynomial_flux(int dim, std::vector<double> quad, std::vector<double> cubic) {
  if (static_cast<int>(quad.size()) != dim || static_cast<int>(cubic.size()) != dim)
    throw ConfigError("polynomial flux needs one quadratic and one cubic coefficient per axis");
  for (double v : quad)
    if (!std::isfinite(v)) throw ConfigError("flux coefficient is not finite");
  for (double v : cubic)
    if (!std::isfinite(v)) throw ConfigError("flux coefficient is not finite");
  return {"poly", std::move(quad), std::move(cubic)};
}

FluxSpec zero_flux(int dim) {
  return {"zero", std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
}

}  // namespace radgas
