#include "radgas/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "radgas/errors.hpp"

namespace radgas {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& raw, const std::string& key) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(raw);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse '" + item + "' as number in " + key);
    }
  }
  return out;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
  KeyValueConfig kv;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (!section.empty() && key.find('.') == std::string::npos) key = section + "." + key;
    kv.entries_[key] = value;
  }
  return kv;
}

KeyValueConfig KeyValueConfig::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

void KeyValueConfig::set(const std::string& dotted_key, const std::string& value) {
  if (dotted_key.empty()) throw ConfigError("empty config key");
  entries_[dotted_key] = value;
}

bool KeyValueConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": cannot parse '" + it->second + "' as number");
  }
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": cannot parse '" + it->second + "' as integer");
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw ConfigError("config key " + key + ": cannot parse '" + v + "' as boolean");
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key,
                                                const std::vector<double>& fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return parse_double_list(it->second, key);
}

std::string KeyValueConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Linear: return "linear";
    case Suite::NonlinearDecay: return "nonlinear-decay";
    default: return "profile";
  }
}

namespace {

Suite suite_from_name(const std::string& name) {
  if (name == "linear") return Suite::Linear;
  if (name == "nonlinear-decay") return Suite::NonlinearDecay;
  if (name == "profile") return Suite::Profile;
  throw ConfigError("unknown suite '" + name + "' (linear, nonlinear-decay, profile)");
}

std::array<double, 3> center_from(const KeyValueConfig& kv, const std::string& key) {
  const auto v = kv.get_doubles(key, {});
  std::array<double, 3> c{0, 0, 0};
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) c[i] = v[i];
  return c;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_kv(const KeyValueConfig& kv) {
  ExperimentConfig cfg;
  cfg.dim = kv.get_int("grid.n", 1);
  cfg.points = kv.get_int("grid.points", 256);
  cfg.box_length = kv.get_double("grid.length", 64.0);

  const std::string data_kind = kv.get_string("initial_data.name", "gaussian");
  if (data_kind == "gaussian") {
    cfg.initial = InitialDataSpec::gaussian(kv.get_double("initial_data.amplitude", 0.01),
                                            kv.get_double("initial_data.width", std::sqrt(2.0)),
                                            center_from(kv, "initial_data.center"));
  } else if (data_kind == "gaussian_mixture") {
    const int count = kv.get_int("initial_data.count", 2);
    std::vector<GaussianSpec> bumps;
    for (int i = 0; i < count; ++i) {
      const std::string pre = "initial_data.bump" + std::to_string(i) + "_";
      GaussianSpec b;
      b.amplitude = kv.get_double(pre + "amplitude", 0.01);
      b.width = kv.get_double(pre + "width", std::sqrt(2.0));
      b.center = center_from(kv, pre + "center");
      bumps.push_back(b);
    }
    cfg.initial = InitialDataSpec::mixture(std::move(bumps));
  } else if (data_kind == "derivative_of_gaussian") {
    cfg.initial = InitialDataSpec::derivative_of_gaussian(
        kv.get_double("initial_data.amplitude", 0.01),
        kv.get_double("initial_data.width", std::sqrt(2.0)), kv.get_int("initial_data.axis", 0));
  } else if (data_kind == "band_limited_random") {
    cfg.initial = InitialDataSpec::band_limited_random(
        static_cast<std::uint64_t>(kv.get_int("initial_data.seed", 1)),
        kv.get_int("initial_data.band", 8), kv.get_double("initial_data.amplitude", 0.01));
  } else {
    throw ConfigError("unknown initial data '" + data_kind + "'");
  }

  const std::string flux_name = kv.get_string("flux.name", "burgers");
  if (flux_name == "burgers") {
    cfg.flux = burgers_flux(cfg.dim);
  } else if (flux_name == "zero") {
    cfg.flux = zero_flux(cfg.dim);
  } else if (flux_name == "poly") {
    auto quad = kv.get_doubles("flux.quadratic", std::vector<double>(cfg.dim, 0.5));
    auto cubic = kv.get_doubles("flux.cubic", std::vector<double>(cfg.dim, 0.0));
    if (static_cast<int>(quad.size()) == 1) quad.assign(cfg.dim, quad[0]);
    if (static_cast<int>(cubic.size()) == 1) cubic.assign(cfg.dim, cubic[0]);
    cfg.flux = polynomial_flux(cfg.dim, std::move(quad), std::move(cubic));
  } else {
    throw ConfigError("unknown flux '" + flux_name + "' (burgers, poly, zero)");
  }

  cfg.integrator.dt = kv.get_double("integrator.dt", 0.05);
  cfg.integrator.scheme = scheme_from_name(kv.get_string("integrator.scheme", "exp-rk4"));
  cfg.integrator.t_end = kv.get_double("integrator.t_end", 0.0);
  cfg.integrator.dealias = kv.get_bool("integrator.dealias", true);
  cfg.integrator.blowup_factor = kv.get_double("integrator.blowup_factor", 10.0);
  cfg.output_t0 = kv.get_double("integrator.output_t0", 0.1);
  cfg.output_ratio = kv.get_double("integrator.output_ratio", 1.3);

  const int default_s = std::max(cfg.dim / 2 + 2, cfg.dim == 1 ? 3 : 0);
  cfg.sobolev_order = kv.get_int("suites.sobolev_order", default_s);
  std::string raw = kv.get_string("suites.enabled", "linear");
  std::stringstream ss(raw);
  std::string item;
  cfg.suites.clear();
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) cfg.suites.push_back(suite_from_name(item));
  }

  cfg.fit_window_lo = kv.get_double("fit.window_lo", -1.0);
  cfg.fit_window_hi = kv.get_double("fit.window_hi", -1.0);
  cfg.linear_tolerance = kv.get_double("fit.linear_tolerance", 0.10);
  cfg.nonlinear_tolerance = kv.get_double("fit.nonlinear_tolerance", 0.15);

  cfg.output_dir = kv.get_string("output.directory", "runs/out");
  cfg.dump_snapshots = kv.get_bool("output.dump_snapshots", false);
  return cfg;
}

KeyValueConfig ExperimentConfig::to_kv() const {
  KeyValueConfig kv;
  kv.set("grid.n", std::to_string(dim));
  kv.set("grid.points", std::to_string(points));
  kv.set("grid.length", std::to_string(box_length));

  auto set_d = [&kv](const std::string& k, double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    kv.set(k, os.str());
  };

  switch (initial.kind) {
    case InitialDataSpec::Kind::Gaussian: {
      kv.set("initial_data.name", "gaussian");
      set_d("initial_data.amplitude", initial.bumps[0].amplitude);
      set_d("initial_data.width", initial.bumps[0].width);
      const auto& c = initial.bumps[0].center;
      kv.set("initial_data.center", std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                        std::to_string(c[2]));
      break;
    }
    case InitialDataSpec::Kind::GaussianMixture: {
      kv.set("initial_data.name", "gaussian_mixture");
      kv.set("initial_data.count", std::to_string(initial.bumps.size()));
      for (std::size_t i = 0; i < initial.bumps.size(); ++i) {
        const std::string pre = "initial_data.bump" + std::to_string(i) + "_";
        set_d(pre + "amplitude", initial.bumps[i].amplitude);
        set_d(pre + "width", initial.bumps[i].width);
        const auto& c = initial.bumps[i].center;
        kv.set(pre + "center", std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                   std::to_string(c[2]));
      }
      break;
    }
    case InitialDataSpec::Kind::DerivativeOfGaussian:
      kv.set("initial_data.name", "derivative_of_gaussian");
      set_d("initial_data.amplitude", initial.bumps[0].amplitude);
      set_d("initial_data.width", initial.bumps[0].width);
      kv.set("initial_data.axis", std::to_string(initial.axis));
      break;
    case InitialDataSpec::Kind::BandLimitedRandom:
      kv.set("initial_data.name", "band_limited_random");
      kv.set("initial_data.seed", std::to_string(initial.seed));
      kv.set("initial_data.band", std::to_string(initial.band));
      set_d("initial_data.amplitude", initial.amplitude);
      break;
  }

  kv.set("flux.name", flux.name);
  if (flux.name == "poly") {
    std::string q, c;
    for (int j = 0; j < flux.axes(); ++j) {
      q += (j ? "," : "") + std::to_string(flux.quad[j]);
      c += (j ? "," : "") + std::to_string(flux.cubic[j]);
    }
    kv.set("flux.quadratic", q);
    kv.set("flux.cubic", c);
  }

  set_d("integrator.dt", integrator.dt);
  kv.set("integrator.scheme", scheme_name(integrator.scheme));
  set_d("integrator.t_end", integrator.t_end);
  kv.set("integrator.dealias", integrator.dealias ? "true" : "false");
  set_d("integrator.blowup_factor", integrator.blowup_factor);
  set_d("integrator.output_t0", output_t0);
  set_d("integrator.output_ratio", output_ratio);

  std::string suites_raw;
  for (std::size_t i = 0; i < suites.size(); ++i)
    suites_raw += (i ? "," : "") + suite_name(suites[i]);
  kv.set("suites.enabled", suites_raw);
  kv.set("suites.sobolev_order", std::to_string(sobolev_order));

  set_d("fit.window_lo", fit_window_lo);
  set_d("fit.window_hi", fit_window_hi);
  set_d("fit.linear_tolerance", linear_tolerance);
  set_d("fit.nonlinear_tolerance", nonlinear_tolerance);

  kv.set("output.directory", output_dir.string());
  kv.set("output.dump_snapshots", dump_snapshots ? "true" : "false");
  return kv;
}

void ExperimentConfig::validate() {
  warnings.clear();
  Grid grid = make_grid();  // grid invariants checked in its constructor

  const bool integrates =
      std::find_if(suites.begin(), suites.end(), [](Suite s) { return s != Suite::Linear; }) !=
      suites.end();

  const double width = initial.min_width();
  if (initial.kind != InitialDataSpec::Kind::BandLimitedRandom) {
    if (width < 1.0 * grid.dx())
      throw ConfigError("initial data width " + std::to_string(width) +
                        " is below one grid spacing dx=" + std::to_string(grid.dx()) +
                        "; the bump is not representable");
    if (width < 8.0 * grid.dx())
      warnings.push_back("initial data width " + std::to_string(width) + " has fewer than 8 " +
                         "points per width (dx=" + std::to_string(grid.dx()) +
                         "); fine for spectral Gaussians, monitor aliasing");
  } else {
    if (initial.band >= points / 2)
      throw ConfigError("random band must be below N/2");
  }

  const int min_s = std::max(dim / 2 + 2, dim == 1 ? 3 : 0);
  const bool profile_enabled =
      std::find(suites.begin(), suites.end(), Suite::Profile) != suites.end();
  if (profile_enabled && dim >= 2 && sobolev_order < dim / 2 + 2)
    throw ConfigError("profile suite needs s >= [n/2]+2 = " + std::to_string(dim / 2 + 2));
  if (sobolev_order < min_s)
    warnings.push_back("sobolev order s=" + std::to_string(sobolev_order) +
                       " is below the theorems' s >= " + std::to_string(min_s));

  if (integrates) {
    integrator.validate();
    if (!(integrator.t_end > 0.0))
      throw ConfigError("integrating suites need integrator.t_end > 0");
    // Periodic-box truncation guard: wrap-around stays below tolerance over
    // the simulated horizon for heat-like spreading plus the data's support.
    const double required =
        12.0 * std::sqrt(1.0 + integrator.t_end) + initial.support_radius();
    if (box_length < required)
      throw ConfigError("box too small for horizon: need L >= 12 sqrt(1+T) + support = " +
                        std::to_string(required) + ", have " + std::to_string(box_length));
    if (!(output_t0 > 0.0) || !(output_ratio > 1.0))
      throw ConfigError("output grid needs t0 > 0 and ratio > 1");
  }

  if (fit_window_lo >= 0.0 && fit_window_hi >= 0.0 && fit_window_lo >= fit_window_hi)
    throw ConfigError("fit window must satisfy lo < hi");
}

std::string ExperimentConfig::canonical_text() const { return to_kv().canonical(); }

std::uint64_t ExperimentConfig::hash() const {
  // FNV-1a over the canonical serialization, excluding output.* keys: the
  // hash identifies the experiment, not where its artifacts land.
  const KeyValueConfig kv = to_kv();
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [key, value] : kv.entries()) {
    if (key.rfind("output.", 0) == 0) continue;
    const std::string line = key + " = " + value + "\n";
    for (unsigned char c : line) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  return h;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides) {
  KeyValueConfig kv = KeyValueConfig::parse_file(path);
  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override must look like section.key=value, got '" + ov + "'");
    kv.set(trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
  }
  ExperimentConfig cfg = ExperimentConfig::from_kv(kv);
  cfg.validate();
  return cfg;
}

}  // namespace radgas
