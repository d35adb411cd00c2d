#pragma once

#include <vector>

#include "radgas/field.hpp"

namespace radgas {

/// Apply the linear solution operator G(t), symbol e^{-|xi|^2 t/(1+|xi|^2)}.
/// Exact semigroup: composing G(t1), G(t2) equals G(t1+t2) to rounding.
Field propagate_G(const Field& f, double t);
SpectralField propagate_G(const SpectralField& F, double t);

/// Heat semigroup G_0(t), symbol e^{-|xi|^2 t}.
Field propagate_heat(const Field& f, double t);
SpectralField propagate_heat(const SpectralField& F, double t);

/// Linear diffusion wave u*(x,t) = M G_0(x,t+1) sampled from the closed-form
/// Gaussian about the box center, with q* = -grad u* computed spectrally.
struct DiffusionWave {
  double mass = 0.0;
  Grid grid;
  double time_offset = 1.0;

  Field evaluate(double t) const;
};
struct DiffusionWavePair {
  Field u_star;
  VectorField q_star;
};
DiffusionWavePair diffusion_wave(double mass, double t, const Grid& grid);

/// Largest T with Gaussian tail mass outside the box below `tail_tol`
/// (union bound over axes), for data of std `width` supported within
/// `support_radius` of the box center spreading like the heat kernel.
double box_validity_horizon(const Grid& grid, double width, double support_radius,
                            double tail_tol = 1e-8);

/// One measured point of a bounded-ratio or fitted-slope lemma check.
struct RatePoint {
  double t = 0.0;
  double value = 0.0;
  double bound = 0.0;  // reference envelope at this t (0 when not applicable)
};

/// Lemma-style decay verification for ||d^k G(t) phi|| against
/// (1+t)^{-n/4-k/2} ||phi||_L1 + e^{-t/2} ||d^k phi||_L2: the ratio must stay
/// bounded with no growth trend toward the window end.
struct PropagatorDecayReport {
  struct PerOrder {
    int k = 0;
    std::vector<RatePoint> points;  // value = measured norm, bound = envelope
    double sup_ratio = 0.0;
    bool pass = false;
  };
  std::vector<PerOrder> orders;
  double horizon = 0.0;
  bool pass = false;
};
PropagatorDecayReport verify_propagator_decay(const Field& phi, const std::vector<double>& times,
                                              int max_order = 3);

/// Fitted-slope checks; filled in by the analysis module's fit and gated
/// against theory + slack by the caller.
struct SlopeCheck {
  int k = 0;
  double theory = 0.0;
  double fitted = 0.0;
  double rms = 0.0;
  bool one_sided = false;  // pass iff fitted <= theory + tol
  bool pass = false;
  std::vector<RatePoint> points;
};

/// ||d^k (G - G_0)(t) u0||_L2 decay, theory exponent -(n/4 + k/2 + 1).
std::vector<SlopeCheck> verify_G_minus_G0(const Field& u0, const std::vector<double>& times,
                                          int max_order, double slack = 0.1);

/// ||d^k G_0(t) phi||_L2 for zero-mass phi, theory -(n/4 + (k+1)/2).
/// Rejects phi with |mass| > 1e-10 ||phi||_L1.
std::vector<SlopeCheck> verify_heat_moment(const Field& phi, const std::vector<double>& times,
                                           int max_order, double slack = 0.1);

}  // namespace radgas
