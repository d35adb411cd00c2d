#pragma once

#include <map>
#include <string>
#include <vector>

namespace radgas {

/// Time-stamped nonnegative norm measurements from one run.
struct NormSeries {
  std::string kind;  // e.g. "L2", "L1", "dx1_L2", "q_dx0_L2", "u_minus_ustar_k0"
  std::vector<double> times;   // strictly increasing
  std::vector<double> values;  // >= 0
  std::map<std::string, std::string> metadata;

  void push(double t, double v);
  std::size_t size() const { return times.size(); }
};

/// Power-law fit  value ~ C (1+t)^alpha, least squares in log-log.
/// With log_correction set the model is C ln(1+t) (1+t)^alpha (the n=2
/// profile theorem's rho(t) factor).
struct DecayFit {
  double exponent = 0.0;
  double log10_amplitude = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double rms = 0.0;
  int points = 0;
  double decades = 0.0;  // log10((1+t_hi)/(1+t_lo))
  bool log_correction = false;
  bool window_reliable = false;  // at least one decade in (1+t)
};

struct FitWindow {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Least squares of log10(value) (minus log10 ln(1+t) when the flag is set)
/// against log10(1+t) over samples inside the window.  Requires >= 6 samples
/// with positive values; otherwise raises FitError.
DecayFit fit_decay(const NormSeries& series, const FitWindow& window,
                   bool log_correction = false);

/// Geometric output grid t_m = (1+t0) r^m - 1 clipped to [t0, t_end],
/// with t=0 prepended.  Power laws are straight lines on it.
std::vector<double> geometric_times(double t0, double t_end, double ratio);

}  // namespace radgas
