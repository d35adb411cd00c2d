#include "radgas/symbols.hpp"

#include <cmath>

namespace radgas {

PropagatorSymbol identity_symbol() {
  return {"identity", [](double) { return 1.0; }};
}

PropagatorSymbol helmholtz_inverse_symbol() {
  return {"(1-laplacian)^-1", [](double s) { return 1.0 / (1.0 + s); }};
}

PropagatorSymbol laplacian_symbol() {
  return {"laplacian", [](double s) { return -s; }};
}

PropagatorSymbol semigroup_symbol(double t) {
  return {"G(" + std::to_string(t) + ")",
          [t](double s) { return std::exp(-s * t / (1.0 + s)); }};
}

PropagatorSymbol heat_symbol(double t) {
  return {"G0(" + std::to_string(t) + ")", [t](double s) { return std::exp(-s * t); }};
}

PropagatorSymbol semigroup_minus_heat_symbol(double t) {
  return {"G-G0(" + std::to_string(t) + ")", [t](double s) {
            return std::exp(-s * t / (1.0 + s)) - std::exp(-s * t);
          }};
}

}  // namespace radgas
