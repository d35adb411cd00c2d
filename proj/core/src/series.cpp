#include "radgas/series.hpp"

#include <cmath>
#include <string>

#include "radgas/errors.hpp"

namespace radgas {

void NormSeries::push(double t, double v) {
  if (!times.empty() && t <= times.back())
    throw ConfigError("NormSeries: times must be strictly increasing");
  if (v < 0.0 || !std::isfinite(v))
    throw NumericalError("NormSeries: values must be finite and >= 0");
  times.push_back(t);
  values.push_back(v);
}

DecayFit fit_decay(const NormSeries& series, const FitWindow& window, bool log_correction) {
  if (window.t_lo >= window.t_hi) throw FitError("fit window is empty");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i];
    if (t < window.t_lo - 1e-12 || t > window.t_hi + 1e-12) continue;
    const double v = series.values[i];
    if (v <= 0.0)
      throw FitError("fit_decay: nonpositive value at t=" + std::to_string(t) +
                     " (norm hit the floating-point floor; shrink the window)");
    double y = std::log10(v);
    if (log_correction) {
      const double rho = std::log(1.0 + t);
      if (rho <= 0.0) throw FitError("fit_decay: log correction needs t > 0 samples");
      y -= std::log10(rho);
    }
    xs.push_back(std::log10(1.0 + t));
    ys.push_back(y);
  }
  if (xs.size() < 6)
    throw FitError("fit_decay: need at least 6 samples in window, have " +
                   std::to_string(xs.size()));

  const std::size_t m = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  if (denom <= 0.0) throw FitError("fit_decay: degenerate abscissae");
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;

  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (slope * xs[i] + intercept);
    ss += r * r;
  }

  DecayFit fit;
  fit.exponent = slope;
  fit.log10_amplitude = intercept;
  fit.t_lo = window.t_lo;
  fit.t_hi = window.t_hi;
  fit.rms = std::sqrt(ss / m);
  fit.points = static_cast<int>(m);
  fit.decades = std::log10((1.0 + window.t_hi) / (1.0 + window.t_lo));
  fit.log_correction = log_correction;
  fit.window_reliable = fit.decades >= 1.0;
  return fit;
}

std::vector<double> geometric_times(double t0, double t_end, double ratio) {
  if (!(t0 > 0.0) || !(t_end > t0) || !(ratio > 1.0))
    throw ConfigError("geometric_times: need 0 < t0 < t_end and ratio > 1");
  std::vector<double> out{0.0};
  double t = t0;
  while (t < t_end - 1e-12) {
    out.push_back(t);
    t = (1.0 + t) * ratio - 1.0;
  }
  out.push_back(t_end);
  return out;
}

}  // namespace radgas
