#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radgas/field.hpp"
#include "radgas/integrator.hpp"
#include "radgas/series.hpp"

namespace radgas {

/// The four time-weighted functionals of the decay machinery, computed from
/// trajectory snapshots:
///   E(T)^2 = sum_{j<=s}   sup_{t<=T} (1+t)^j     ||d^j u||_{H^{s-j}}^2
///   D(T)^2 = sum_{j<=s-1} int_0^T    (1+tau)^j   ||d^{j+1} u||_{H^{s-j-1}}^2
///   M(T)^2 = sum_{j<=s-1} sup_{t<=T} (1+t)^{n/2+j} ||d^j u||_{H^{s-j}}^2
///   N(T)   = sup_{t<=T} (1+t) ||d_x u||_Linf
/// E, M, N are running suprema; D accumulates by the trapezoid rule.
struct WeightedEnergyReport {
  double T = 0.0;
  double E = 0.0, D = 0.0, M = 0.0, N = 0.0;
  // Running values at each snapshot time (same index as `times`).
  std::vector<double> times;
  std::vector<double> E_running, D_running, M_running, N_running;
};

WeightedEnergyReport compute_weighted_energies(const Trajectory& traj, int s);

/// ||u||_Linf / ( ||u||_L2^{1-theta} ||d^{s0} u||_L2^{theta} ), the
/// Gagliardo-Nirenberg ratio with theta = n/(2 s0).  The inequality says
/// this is bounded by an absolute constant; zero fields are rejected.
double gn_inequality_check(const Field& u, int s0);
/// Default s0 = [n/2]+1 for the grid's dimension.
double gn_inequality_check(const Field& u);

/// One named fitted-rate verdict destined for the JSON summary.
struct RateVerdict {
  std::string name;
  double theory = 0.0;
  double fitted = 0.0;
  double rms = 0.0;
  double tolerance = 0.0;
  bool one_sided = false;  // pass iff fitted <= theory + tolerance
  bool log_corrected = false;
  bool pass = false;
  std::string skip_reason;  // set when the check could not run
};

/// Asymptotic-profile verification against the diffusion wave
/// (u*, q*) = (M G_0(x, t+1), -grad u*):
///  - ||d^k (u - u*)||_L2 vs -(n/4 + (k+1)/2), rho-corrected at n=2
///  - ||d^k (q - q*)||_L2 vs -(n/4 + (k+2)/2), rho-corrected at n=2
///  - the three-way split u-ubar, ubar-utilde, utilde-u* at k = 0
/// Requires n >= 2 (the theorem's hypothesis); n=1 yields a skip.
struct ProfileReport {
  bool applicable = false;
  std::string skip_reason;
  double mass = 0.0;
  std::vector<NormSeries> series;
  std::vector<RateVerdict> verdicts;       // gated checks
  std::vector<RateVerdict> informational;  // dual fits, never gated
  bool pass = false;
};

ProfileReport verify_asymptotic_profile(const Trajectory& traj, const Field& u0,
                                        const FitWindow& window, double slope_tolerance = 0.15);

}  // namespace radgas
