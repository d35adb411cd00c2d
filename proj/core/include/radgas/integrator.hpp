#pragma once

#include <string>
#include <vector>

#include "radgas/field.hpp"
#include "radgas/flux.hpp"

namespace radgas {

enum class Scheme { ExpEuler, ExpRK2, ExpRK4 };

Scheme scheme_from_name(const std::string& name);
std::string scheme_name(Scheme s);
int scheme_order(Scheme s);

/// Time integration setup for the decoupled evolution.  The linear part is
/// propagated exactly (the semigroup symbol is bounded by 1, so accuracy,
/// not stability, caps the step).
struct IntegratorConfig {
  double dt = 0.05;
  Scheme scheme = Scheme::ExpRK4;
  double t_end = 0.0;
  std::vector<double> output_times;  // sorted, within [0, t_end]
  bool dealias = true;
  double blowup_factor = 10.0;

  void validate() const;
};

/// Snapshots at the requested output times plus per-snapshot diagnostics.
struct Trajectory {
  struct Snapshot {
    double t = 0.0;
    Field u;
    double mass = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
  };
  Grid grid;
  std::vector<Snapshot> snapshots;
  std::string flux_name;
  std::uint64_t config_hash = 0;
  long steps_taken = 0;

  explicit Trajectory(const Grid& g) : grid(g) {}
  const Snapshot& at_time(double t) const;
};

/// Duhamel stepping engine; builds per-mode exponential weights once for a
/// (grid, dt, scheme) triple and reuses them every step.
class Stepper {
 public:
  Stepper(const Grid& grid, double dt, Scheme scheme, FluxSpec flux, bool dealias,
          double blowup_linf);

  /// Advance the spectral state by one step of size dt.
  void step(SpectralField& U, double t_now) const;
  double dt() const { return dt_; }

 private:
  SpectralField nonlinear(const SpectralField& U, double t_now) const;

  Grid grid_;
  double dt_;
  Scheme scheme_;
  FluxSpec flux_;
  bool dealias_;
  double blowup_linf_;
  // Per-mode weights: exp(z), exp(z/2), and phi-quadrature combinations.
  std::vector<double> exp_full_, exp_half_, w_half_phi1_;
  std::vector<double> w_euler_, w_rk2_a_, w_rk2_b_;
  std::vector<double> w_rk4_a_, w_rk4_b_, w_rk4_c_;
};

/// phi_j(z) = (e^z - sum_{m<j} z^m/m!) / z^j, evaluated stably (series for
/// small |z|, closed form otherwise).
double phi1(double z);
double phi2(double z);
double phi3(double z);

/// One step of size dt from state u (convenience wrapper over Stepper).
Field step(const Field& u, double dt, const FluxSpec& flux, Scheme scheme,
           bool dealias = true, double blowup_factor = 10.0);

/// Integrate u0 to cfg.t_end, recording snapshots at cfg.output_times.
Trajectory integrate(const Field& u0, const IntegratorConfig& cfg, const FluxSpec& flux);

}  // namespace radgas
