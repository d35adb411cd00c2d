#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "radgas/flux.hpp"
#include "radgas/grid.hpp"
#include "radgas/initial_data.hpp"
#include "radgas/integrator.hpp"

namespace radgas {

/// Flat key/value pairs grouped into [section]s; keys address as
/// "section.key".  Later assignments win, so CLI overrides simply append.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::filesystem::path& path);
  static KeyValueConfig parse_text(const std::string& text);

  void set(const std::string& dotted_key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key,
                                  const std::vector<double>& fallback) const;

  /// Canonical serialization: sorted keys, one "key = value" per line.
  std::string canonical() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Which verification suites to run.
enum class Suite { Linear, NonlinearDecay, Profile };
std::string suite_name(Suite s);

/// Fully-resolved experiment description.
struct ExperimentConfig {
  // [grid]
  int dim = 1;
  int points = 256;
  double box_length = 64.0;

  // [initial_data]
  InitialDataSpec initial;

  // [flux]
  FluxSpec flux = burgers_flux(1);

  // [integrator]
  IntegratorConfig integrator;
  double output_t0 = 0.1;
  double output_ratio = 1.3;

  // [suites]
  std::vector<Suite> suites;
  int sobolev_order = 3;  // s; defaults to max([n/2]+2, 3 for n=1)

  // [fit]
  double fit_window_lo = -1.0;  // < 0 means auto: [T_valid/8, T_valid]
  double fit_window_hi = -1.0;
  double linear_tolerance = 0.10;
  double nonlinear_tolerance = 0.15;

  // [output]
  std::filesystem::path output_dir = "runs/out";
  bool dump_snapshots = false;

  std::vector<std::string> warnings;  // populated by validate()

  Grid make_grid() const { return Grid(dim, points, box_length); }
  void validate();

  /// FNV-1a hash of the canonical key/value form; the reproducibility key.
  std::uint64_t hash() const;
  std::string canonical_text() const;

  static ExperimentConfig from_kv(const KeyValueConfig& kv);
  KeyValueConfig to_kv() const;
};

/// Convenience: parse file + apply "section.key=value" overrides + validate.
ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});

}  // namespace radgas
