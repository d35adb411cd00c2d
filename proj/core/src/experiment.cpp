#include "radgas/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "radgas/errors.hpp"
#include "radgas/fft.hpp"
#include "radgas/field_io.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"
#include "radgas/propagators.hpp"
#include "radgas/symbols.hpp"

namespace radgas {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_series_csv(const NormSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "t,value\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << format_g17(s.times[i]) << ',' << format_g17(s.values[i]) << '\n';
}

RateVerdict make_fit_check(const std::string& name, const NormSeries& series,
                           const FitWindow& window, double theory, double tol, bool one_sided,
                           bool log_corr = false) {
  RateVerdict v;
  v.name = name;
  v.theory = theory;
  v.tolerance = tol;
  v.one_sided = one_sided;
  v.log_corrected = log_corr;
  try {
    const DecayFit fit = fit_decay(series, window, log_corr);
    v.fitted = fit.exponent;
    v.rms = fit.rms;
    v.pass = one_sided ? (v.fitted <= theory + tol) : (std::abs(v.fitted - theory) <= tol);
  } catch (const FitError& e) {
    v.skip_reason = e.what();
    v.pass = false;
  }
  return v;
}

ScalarCheck make_scalar(const std::string& name, double value, double threshold,
                        const std::string& cmp = "<=", const std::string& detail = "") {
  ScalarCheck c{name, value, threshold, cmp, false, detail};
  c.pass = cmp == "<" ? value < threshold : value <= threshold;
  return c;
}

struct SeriesStore {
  std::deque<NormSeries> all;  // deque: fresh() references stay valid as it grows
  NormSeries& fresh(const std::string& kind) {
    all.emplace_back();
    all.back().kind = kind;
    return all.back();
  }
};

// ---------------------------------------------------------------------------
// Linear suite: propagator lemma checks, no time integration.
// ---------------------------------------------------------------------------
SuiteResult linear_suite(const ExperimentConfig& cfg, const Grid& grid, const Field& u0,
                         double M, const FitWindow& window, double horizon,
                         SeriesStore& store) {
  SuiteResult res;
  res.suite = "linear";
  const int n = grid.dim();
  const double tol = cfg.linear_tolerance;
  const double l1_u0 = l1_norm(u0);
  const bool zero_mass = std::abs(M) <= 1e-10 * std::max(l1_u0, 1e-300);

  std::vector<double> times;
  for (double t : geometric_times(cfg.output_t0, window.t_hi, cfg.output_ratio))
    if (t > 0.0) times.push_back(t);

  // Lemma 4.1 bounded-ratio check, k = 0..3.
  {
    const auto rep = verify_propagator_decay(u0, times, 3);
    for (const auto& ord : rep.orders) {
      ScalarCheck c = make_scalar("lemma41_ratio_growth_k" + std::to_string(ord.k),
                                  ord.sup_ratio, 1e6, "<",
                                  "sup ratio of ||d^k G(t)phi|| to its lemma envelope");
      c.pass = ord.pass;
      res.scalar_checks.push_back(c);
      auto& s = store.fresh("lemma41_ratio_k" + std::to_string(ord.k));
      for (const auto& p : ord.points) s.push(p.t, p.value / p.bound);
    }
  }

  // Optimal linear decay fits (nonzero-mass data): u and q, k = 0..2.
  const SpectralField U0 = forward_transform(u0);
  if (!zero_mass) {
    std::vector<NormSeries*> su(3), sq(3);
    for (int k = 0; k <= 2; ++k) {
      su[k] = &store.fresh("linear_u_k" + std::to_string(k));
      sq[k] = &store.fresh("linear_q_k" + std::to_string(k));
    }
    SpectralField work = U0;
    for (double t : times) {
      work.coeffs = U0.coeffs;
      apply_multiplier_inplace(work, semigroup_symbol(t));
      for (int k = 0; k <= 2; ++k) {
        su[k]->push(t, derivative_seminorm(work, k));
        sq[k]->push(t, q_derivative_seminorm(work, k));
      }
    }
    for (int k = 0; k <= 2; ++k) {
      res.rate_checks.push_back(make_fit_check("linear_u_decay_k" + std::to_string(k), *su[k],
                                               window, -(0.25 * n + 0.5 * k), tol,
                                               /*one_sided=*/false));
      res.rate_checks.push_back(make_fit_check("linear_q_decay_k" + std::to_string(k), *sq[k],
                                               window, -(0.25 * n + 0.5 * (k + 1)), tol,
                                               /*one_sided=*/false));
    }
  } else {
    res.skips.emplace_back("linear_u_decay",
                           "zero-mass data: optimal-decay equality targets assume M != 0");
  }

  // G - G0 comparison, k = 0..1 (one-sided: the difference decays at least
  // one order faster).
  {
    SpectralField work = U0;
    std::vector<NormSeries*> sd(2);
    for (int k = 0; k <= 1; ++k) sd[k] = &store.fresh("g_minus_g0_k" + std::to_string(k));
    for (double t : times) {
      work.coeffs = U0.coeffs;
      apply_multiplier_inplace(work, semigroup_minus_heat_symbol(t));
      for (int k = 0; k <= 1; ++k) sd[k]->push(t, derivative_seminorm(work, k));
    }
    for (int k = 0; k <= 1; ++k)
      res.rate_checks.push_back(make_fit_check("g_minus_g0_k" + std::to_string(k), *sd[k],
                                               window, -(0.25 * n + 0.5 * k + 1.0), tol,
                                               /*one_sided=*/true));
  }

  // Zero-mass acceleration under the heat kernel (EO2 hypothesis: mass 0).
  if (zero_mass) {
    SpectralField work = U0;
    std::vector<NormSeries*> sh(3);
    for (int k = 0; k <= 2; ++k) sh[k] = &store.fresh("eo2_k" + std::to_string(k));
    for (double t : times) {
      work.coeffs = U0.coeffs;
      apply_multiplier_inplace(work, heat_symbol(t));
      for (int k = 0; k <= 2; ++k) sh[k]->push(t, derivative_seminorm(work, k));
    }
    for (int k = 0; k <= 2; ++k)
      res.rate_checks.push_back(make_fit_check("eo2_k" + std::to_string(k), *sh[k], window,
                                               -(0.25 * n + 0.5 * (k + 1)), tol,
                                               /*one_sided=*/true));
  } else {
    res.skips.emplace_back("eo2", "data has nonzero mass (EO2 hypothesis is mass 0)");
  }

  // EO1 with q = 2: t^{k/2} ||d^k G0(t) phi|| / ||phi||_L2 stays bounded.
  {
    const double phi_l2 = l2_norm(U0);
    SpectralField work = U0;
    for (int k = 1; k <= 2; ++k) {
      double sup = 0.0;
      for (double t : times) {
        work.coeffs = U0.coeffs;
        apply_multiplier_inplace(work, heat_symbol(t));
        sup = std::max(sup, std::pow(t, 0.5 * k) * derivative_seminorm(work, k) / phi_l2);
      }
      res.scalar_checks.push_back(make_scalar("eo1_bounded_ratio_k" + std::to_string(k), sup,
                                              10.0, "<",
                                              "sup_t t^{k/2}||d^k G0 phi||/||phi||_L2"));
    }
  }

  (void)horizon;
  for (const auto& c : res.rate_checks) res.pass = res.pass && c.pass;
  for (const auto& c : res.scalar_checks) res.pass = res.pass && c.pass;
  return res;
}

// ---------------------------------------------------------------------------
// Integrating suites share one trajectory.
// ---------------------------------------------------------------------------
struct TrajectorySeries {
  std::vector<NormSeries*> u_k;  // k = 0..2 derivative seminorms (k=0 is L2)
  std::vector<NormSeries*> q_k;
  NormSeries* l1 = nullptr;
  NormSeries* linf = nullptr;
  NormSeries* hs = nullptr;
  NormSeries* nweight = nullptr;  // (1+t)||grad u||_inf
  NormSeries* energy = nullptr;   // uniform energy functional of Eq-type (2.1)
  NormSeries* mass_drift = nullptr;
};

TrajectorySeries measure_trajectory(const Trajectory& traj, int s, double M0,
                                    SeriesStore& store) {
  TrajectorySeries out;
  out.u_k.resize(3);
  out.q_k.resize(3);
  for (int k = 0; k <= 2; ++k) {
    out.u_k[k] = &store.fresh("u_k" + std::to_string(k));
    out.q_k[k] = &store.fresh("q_k" + std::to_string(k));
  }
  out.l1 = &store.fresh("L1");
  out.linf = &store.fresh("Linf");
  out.hs = &store.fresh("Hs");
  out.nweight = &store.fresh("N_weight");
  out.energy = &store.fresh("energy_2_1");
  out.mass_drift = &store.fresh("mass_drift");

  double dissip_integral = 0.0;
  double prev_t = 0.0, prev_dissip = 0.0;
  bool first = true;

  for (const auto& snap : traj.snapshots) {
    const double t = snap.t;
    const SpectralField U = forward_transform(snap.u);

    for (int k = 0; k <= 2; ++k) {
      out.u_k[k]->push(t, derivative_seminorm(U, k));
      out.q_k[k]->push(t, q_derivative_seminorm(U, k));
    }
    out.l1->push(t, l1_norm(snap.u));
    out.linf->push(t, linf_norm(snap.u));
    const double hs = sobolev_norm(U, s);
    out.hs->push(t, hs);

    double grad_inf = 0.0;
    for (int ax = 0; ax < traj.grid.dim(); ++ax)
      grad_inf = std::max(grad_inf, linf_norm(inverse_transform(derivative_spectral(U, ax))));
    out.nweight->push(t, (1.0 + t) * grad_inf);

    // Energy functional of the uniform estimate: ||u||_{H^s}^2 + ||q||_{H^{s+1}}^2
    // + int_0^t ||d_x u||_{H^{s-1}}^2 + ||q||_{H^{s+1}}^2.
    const double q_hs1 = q_sobolev_norm(U, s + 1);
    double du_hs1 = 0.0;
    for (int m = 1; m <= s; ++m) {
      const double dm = derivative_seminorm(U, m);
      du_hs1 += dm * dm;
    }
    const double dissip = du_hs1 + q_hs1 * q_hs1;
    if (!first) dissip_integral += 0.5 * (t - prev_t) * (prev_dissip + dissip);
    prev_t = t;
    prev_dissip = dissip;
    first = false;
    out.energy->push(t, hs * hs + q_hs1 * q_hs1 + dissip_integral);

    out.mass_drift->push(t, std::abs(snap.mass - M0));
  }
  return out;
}

SuiteResult nonlinear_suite(const ExperimentConfig& cfg, const Trajectory& traj,
                            const TrajectorySeries& ts, double M0, double l1_0,
                            const FitWindow& window) {
  SuiteResult res;
  res.suite = "nonlinear-decay";
  const int n = traj.grid.dim();
  const double tol = cfg.nonlinear_tolerance;

  // Theorem rates: ||d^k u|| ~ (1+t)^{-(n/4+k/2)}, ||d^k q|| one half order
  // faster; fitted over the box-valid window.
  for (int k = 0; k <= 1; ++k) {
    res.rate_checks.push_back(make_fit_check("u_decay_k" + std::to_string(k), *ts.u_k[k],
                                             window, -(0.25 * n + 0.5 * k), tol, false));
    res.rate_checks.push_back(make_fit_check("q_decay_k" + std::to_string(k), *ts.q_k[k],
                                             window, -(0.25 * n + 0.5 * (k + 1)), tol, false));
  }

  // Mass conservation over the run.
  double drift = 0.0;
  for (double v : ts.mass_drift->values) drift = std::max(drift, v);
  res.scalar_checks.push_back(make_scalar("mass_drift", drift, 1e-10 * (1.0 + std::abs(M0)),
                                          "<=", "max |M(t) - M(0)| over snapshots"));

  // L1 contraction: discrete L1 non-increasing up to discretization slack,
  // gated both per interval and accumulated over the run.
  {
    const auto& t = ts.l1->times;
    const auto& v = ts.l1->values;
    double max_rate = 0.0, total_up = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      const double up = std::max(0.0, v[i] - v[i - 1]);
      total_up += up;
      if (t[i] > t[i - 1]) max_rate = std::max(max_rate, up / (t[i] - t[i - 1]));
    }
    const double span = t.back() - t.front();
    const double tol_l1 = 1e-8 * std::max(l1_0, 1e-300);
    res.scalar_checks.push_back(make_scalar("l1_monotonicity_rate", max_rate, tol_l1, "<=",
                                            "max interval increase of ||u||_L1 per unit time"));
    res.scalar_checks.push_back(make_scalar("l1_monotonicity_accumulated",
                                            span > 0 ? total_up / span : 0.0, tol_l1, "<=",
                                            "total ||u||_L1 increase / elapsed time"));
  }

  // N(T) boundedness (Remark-1 certificate): running sup of (1+t)||du||_inf
  // stabilizes; max/min over the second half of the fit window below 2.
  {
    double run_sup = 0.0, lo = 0.0, hi = 0.0;
    const double mid = 0.5 * (window.t_lo + window.t_hi);
    bool any = false;
    for (std::size_t i = 0; i < ts.nweight->size(); ++i) {
      run_sup = std::max(run_sup, ts.nweight->values[i]);
      const double t = ts.nweight->times[i];
      if (t >= mid && t <= window.t_hi) {
        if (!any) {
          lo = hi = run_sup;
          any = true;
        }
        lo = std::min(lo, run_sup);
        hi = std::max(hi, run_sup);
      }
    }
    res.scalar_checks.push_back(make_scalar("n_weight_stable", any && lo > 0 ? hi / lo : 1e300,
                                            2.0, "<",
                                            "max/min of running sup (1+t)||du||_inf, 2nd half"));
  }

  // Uniform energy estimate: the combined functional stays within a factor
  // 10 of its early-time value.
  {
    const auto& t = ts.energy->times;
    const auto& v = ts.energy->values;
    double ref = -1.0, worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (ref < 0.0 && t[i] >= 0.1) ref = v[i];
      if (ref > 0.0) worst = std::max(worst, v[i] / ref);
    }
    res.scalar_checks.push_back(
        make_scalar("energy_uniform", ref > 0 ? worst : 1e300, 10.0, "<",
                    "max energy(t)/energy(0.1) along the run"));
  }

  (void)traj;
  for (const auto& c : res.rate_checks) res.pass = res.pass && c.pass;
  for (const auto& c : res.scalar_checks) res.pass = res.pass && c.pass;
  return res;
}

SuiteResult weighted_energy_checks(const Trajectory& traj, int s) {
  SuiteResult res;
  res.suite = "weighted-energies";
  const auto rep = compute_weighted_energies(traj, s);
  // Running suprema must stabilize on decaying runs.
  const auto stab = [](const std::vector<double>& r) {
    const std::size_t m = r.size();
    if (m < 2 || r[m - 2] <= 0.0) return 1e300;
    return r[m - 1] / r[m - 2];
  };
  res.scalar_checks.push_back(make_scalar("E_stabilized", stab(rep.E_running), 1.05, "<",
                                          "E(T_final)/E(T_penultimate)"));
  res.scalar_checks.push_back(make_scalar("M_stabilized", stab(rep.M_running), 1.05, "<",
                                          "M(T_final)/M(T_penultimate)"));
  res.scalar_checks.push_back(
      make_scalar("N_finite", rep.N, 1e6, "<", "N(T) = sup (1+t)||du||_inf"));
  for (const auto& c : res.scalar_checks) res.pass = res.pass && c.pass;
  return res;
}

SuiteResult profile_suite(const ExperimentConfig& cfg, const Trajectory& traj, const Field& u0,
                          const TrajectorySeries& ts, const FitWindow& window,
                          SeriesStore& store) {
  SuiteResult res;
  res.suite = "profile";
  if (traj.grid.dim() < 2) {
    res.skips.emplace_back("profile", "theorem hypothesis n >= 2");
    return res;
  }
  ProfileReport rep = verify_asymptotic_profile(traj, u0, window, cfg.nonlinear_tolerance);
  res.rate_checks = rep.verdicts;
  res.informational = rep.informational;

  // The profile captures the leading term: the (u - u*) slope must beat the
  // plain ||u||_L2 slope by at least 0.3 (both fits uncorrected).
  try {
    const DecayFit fit_u = fit_decay(*ts.u_k[0], window, false);
    const NormSeries* diff0 = nullptr;
    for (const auto& s : rep.series)
      if (s.kind == "u_minus_ustar_k0") diff0 = &s;
    if (diff0) {
      RateVerdict v = make_fit_check("profile_captures_leading_term", *diff0, window,
                                     fit_u.exponent - 0.3, 0.0, /*one_sided=*/true);
      res.rate_checks.push_back(v);
    }
  } catch (const FitError& e) {
    res.skips.emplace_back("profile_captures_leading_term", e.what());
  }

  for (auto& s : rep.series) store.all.push_back(std::move(s));
  for (const auto& c : res.rate_checks) res.pass = res.pass && c.pass;
  return res;
}

ordered_json verdict_json(const RateVerdict& v) {
  ordered_json j;
  j["name"] = v.name;
  j["theory_exponent"] = v.theory;
  if (v.skip_reason.empty()) {
    j["fitted_exponent"] = v.fitted;
    j["rms"] = v.rms;
  }
  j["tolerance"] = v.tolerance;
  j["one_sided"] = v.one_sided;
  j["log_corrected"] = v.log_corrected;
  j["verdict"] = v.pass ? "pass" : "fail";
  if (!v.skip_reason.empty()) j["skip_reason"] = v.skip_reason;
  return j;
}

ordered_json scalar_json(const ScalarCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["value"] = c.value;
  j["threshold"] = c.threshold;
  j["comparison"] = c.comparison;
  j["verdict"] = c.pass ? "pass" : "fail";
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

const SuiteResult* RunRecord::find_suite(const std::string& name) const {
  for (const auto& s : suites)
    if (s.suite == name) return &s;
  return nullptr;
}

const RateVerdict* RunRecord::find_check(const std::string& suite,
                                         const std::string& name) const {
  const SuiteResult* s = find_suite(suite);
  if (!s) return nullptr;
  for (const auto& c : s->rate_checks)
    if (c.name == name) return &c;
  for (const auto& c : s->informational)
    if (c.name == name) return &c;
  return nullptr;
}

const ScalarCheck* RunRecord::find_scalar(const std::string& suite,
                                          const std::string& name) const {
  const SuiteResult* s = find_suite(suite);
  if (!s) return nullptr;
  for (const auto& c : s->scalar_checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string summary_json(const ExperimentConfig& cfg, const RunRecord& rec) {
  ordered_json j;
  j["schema_version"] = 1;
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(rec.config_hash));
  j["config_hash"] = hash_buf;
  ordered_json cfg_json;
  const KeyValueConfig kv = cfg.to_kv();
  for (const auto& [k, v] : kv.entries()) cfg_json[k] = v;
  j["config"] = cfg_json;
  j["initial_functionals"] = {
      {"E0_Hs", rec.E0}, {"E1_Hs_L1", rec.E1}, {"E2_Hs_L11", rec.E2}, {"mass", rec.initial_mass}};
  j["horizon"] = rec.horizon;
  j["fit_window"] = {rec.fit_window.t_lo, rec.fit_window.t_hi};
  j["steps_taken"] = rec.steps_taken;
  j["warnings"] = rec.warnings;
  ordered_json suites = ordered_json::array();
  for (const auto& s : rec.suites) {
    ordered_json js;
    js["suite"] = s.suite;
    js["pass"] = s.pass;
    ordered_json rates = ordered_json::array();
    for (const auto& c : s.rate_checks) rates.push_back(verdict_json(c));
    js["rate_checks"] = rates;
    if (!s.informational.empty()) {
      ordered_json info = ordered_json::array();
      for (const auto& c : s.informational) info.push_back(verdict_json(c));
      js["informational"] = info;
    }
    ordered_json scalars = ordered_json::array();
    for (const auto& c : s.scalar_checks) scalars.push_back(scalar_json(c));
    js["scalar_checks"] = scalars;
    ordered_json skips = ordered_json::array();
    for (const auto& [check, reason] : s.skips)
      skips.push_back(ordered_json{{"check", check}, {"reason", reason}});
    js["skips"] = skips;
    suites.push_back(js);
  }
  j["suites"] = suites;
  ordered_json series = ordered_json::array();
  for (const auto& [kind, path] : rec.series_files)
    series.push_back(ordered_json{{"kind", kind}, {"path", path}});
  j["series"] = series;
  j["overall_pass"] = rec.overall_pass;
  return j.dump(2) + "\n";
}

RunRecord run_experiment(const ExperimentConfig& cfg_in) {
  ExperimentConfig cfg = cfg_in;
  cfg.validate();

  const auto t_start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.config_hash = cfg.hash();
  rec.output_dir = cfg.output_dir;
  rec.warnings = cfg.warnings;

  std::filesystem::create_directories(cfg.output_dir / "norms");
  if (cfg.dump_snapshots) std::filesystem::create_directories(cfg.output_dir / "fields");

  const Grid grid = cfg.make_grid();
  const Field u0 = build_initial_data(cfg.initial, grid);
  const int s = cfg.sobolev_order;

  rec.E0 = sobolev_norm(u0, s);
  rec.E1 = rec.E0 + l1_norm(u0);
  rec.E2 = rec.E0 + weighted_l1_norm(u0, 1.0);
  rec.initial_mass = mass(u0);

  SeriesStore store;
  std::ofstream log(cfg.output_dir / "log.txt", std::ios::trunc);
  log << "radgas run, config hash " << std::hex << rec.config_hash << std::dec << "\n";
  for (const auto& w : cfg.warnings) log << "warning: " << w << "\n";

  const bool zero_field = linf_norm(u0) == 0.0;

  // Box-validity horizon for fit windows: Gaussian tail mass under heat-like
  // spreading below 1e-8.
  const double width = std::max(cfg.initial.min_width(), grid.dx());
  rec.horizon = box_validity_horizon(grid, width, cfg.initial.support_radius());
  double t_hi = cfg.fit_window_hi >= 0.0 ? cfg.fit_window_hi : rec.horizon;
  const bool integrates = std::find_if(cfg.suites.begin(), cfg.suites.end(), [](Suite s) {
                            return s != Suite::Linear;
                          }) != cfg.suites.end();
  if (integrates) t_hi = std::min(t_hi, cfg.integrator.t_end);
  if (!std::isfinite(t_hi) || t_hi > 1e4) t_hi = 200.0;  // random data: no Gaussian tail cap
  const double t_lo = cfg.fit_window_lo >= 0.0 ? cfg.fit_window_lo : t_hi / 8.0;
  rec.fit_window = FitWindow{t_lo, t_hi};
  if (std::log10((1.0 + t_hi) / (1.0 + t_lo)) < 1.0)
    rec.warnings.push_back("fit window spans less than one decade in (1+t); fits reported "
                           "but flagged unreliable");

  if (zero_field) {
    for (Suite suite : cfg.suites) {
      SuiteResult res;
      res.suite = suite_name(suite);
      res.skips.emplace_back("all", "zero field");
      rec.suites.push_back(res);
    }
  } else {
    // Linear suite first (no integration).
    for (Suite suite : cfg.suites)
      if (suite == Suite::Linear)
        rec.suites.push_back(linear_suite(cfg, grid, u0, rec.initial_mass, rec.fit_window,
                                          rec.horizon, store));

    if (integrates) {
      // Output grid: geometric, snapped to the dt lattice, t=0 and T included.
      IntegratorConfig icfg = cfg.integrator;
      std::vector<double> outs;
      for (double t : geometric_times(cfg.output_t0, icfg.t_end, cfg.output_ratio)) {
        const double snapped = std::round(t / icfg.dt) * icfg.dt;
        if (outs.empty() || snapped > outs.back() + 1e-12) outs.push_back(snapped);
      }
      icfg.output_times = outs;

      Trajectory traj = integrate(u0, icfg, cfg.flux);
      rec.steps_taken = traj.steps_taken;
      log << "integrated " << traj.steps_taken << " steps of dt=" << icfg.dt << " to T="
          << icfg.t_end << "\n";

      if (cfg.dump_snapshots) {
        int i = 0;
        for (const auto& snap : traj.snapshots) {
          char name[64];
          std::snprintf(name, sizeof(name), "u_%04d.bin", i++);
          dump_field(snap.u, cfg.output_dir / "fields" / name);
        }
      }

      const TrajectorySeries ts =
          measure_trajectory(traj, s, rec.initial_mass, store);

      for (Suite suite : cfg.suites) {
        if (suite == Suite::NonlinearDecay) {
          rec.suites.push_back(
              nonlinear_suite(cfg, traj, ts, rec.initial_mass, l1_norm(u0), rec.fit_window));
          rec.suites.push_back(weighted_energy_checks(traj, s));
        } else if (suite == Suite::Profile) {
          rec.suites.push_back(profile_suite(cfg, traj, u0, ts, rec.fit_window, store));
        }
      }
    }
  }

  // Persist series and the summary.
  for (const auto& s : store.all) {
    if (s.size() == 0) continue;
    const std::string file = "norms/" + s.kind + ".csv";
    write_series_csv(s, cfg.output_dir / file);
    rec.series_files.emplace_back(s.kind, file);
  }

  rec.overall_pass = true;
  for (const auto& s : rec.suites) rec.overall_pass = rec.overall_pass && s.pass;

  {
    std::ofstream out(cfg.output_dir / "summary.json", std::ios::trunc | std::ios::binary);
    if (!out) throw IoError("cannot write summary.json");
    out << summary_json(cfg, rec);
  }
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  log << "wall seconds: " << elapsed << "\n";
  log << "overall: " << (rec.overall_pass ? "pass" : "fail") << "\n";
  return rec;
}

std::vector<SweepEntry> run_sweep(const ExperimentConfig& base, const std::string& axis,
                                  const std::vector<double>& values) {
  std::vector<SweepEntry> entries;
  for (double v : values) {
    SweepEntry e;
    e.value = v;
    try {
      KeyValueConfig kv = base.to_kv();
      std::ostringstream os;
      os.precision(17);
      os << v;
      kv.set(axis, os.str());
      ExperimentConfig cfg = ExperimentConfig::from_kv(kv);
      std::ostringstream dir;
      dir << "sweep_" << axis << "_" << v;
      std::string d = dir.str();
      for (auto& ch : d)
        if (ch == '.' || ch == '/') ch = '_';
      cfg.output_dir = base.output_dir / d;
      cfg.validate();
      e.record = run_experiment(cfg);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.ok = false;
      e.error = ex.what();
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace radgas
