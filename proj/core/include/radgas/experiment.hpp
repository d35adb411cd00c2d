#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "radgas/analysis.hpp"
#include "radgas/config.hpp"
#include "radgas/series.hpp"

namespace radgas {

/// A named scalar threshold check (mass drift, L1 monotonicity, ...).
struct ScalarCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string comparison = "<=";  // "<=" or "<"
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<RateVerdict> rate_checks;
  std::vector<RateVerdict> informational;
  std::vector<ScalarCheck> scalar_checks;
  std::vector<std::pair<std::string, std::string>> skips;  // check -> reason
  bool pass = true;
};

/// Everything run_experiment produces besides the on-disk artifacts.
struct RunRecord {
  std::uint64_t config_hash = 0;
  double E0 = 0.0;  // ||u0||_{H^s}
  double E1 = 0.0;  // E0 + ||u0||_L1
  double E2 = 0.0;  // E0 + ||u0||_{L1_1}
  double initial_mass = 0.0;
  double horizon = 0.0;      // box-validity horizon used for fit windows
  FitWindow fit_window{};    // actual window used
  long steps_taken = 0;
  std::vector<std::string> warnings;
  std::vector<SuiteResult> suites;
  std::vector<std::pair<std::string, std::string>> series_files;  // kind -> relative path
  std::filesystem::path output_dir;
  bool overall_pass = true;

  const SuiteResult* find_suite(const std::string& name) const;
  const RateVerdict* find_check(const std::string& suite, const std::string& name) const;
  const ScalarCheck* find_scalar(const std::string& suite, const std::string& name) const;
};

/// Run every enabled suite for one configuration, writing
///   <output_dir>/summary.json, norms/*.csv, log.txt
/// (and fields/*.bin snapshots when requested).  Deterministic given the
/// config: seeded randomness, no timing data in summary.json.
RunRecord run_experiment(const ExperimentConfig& cfg);

/// Independent runs along one swept config key (e.g. initial_data.amplitude).
/// Failures are tolerated and recorded per value.
struct SweepEntry {
  double value = 0.0;
  bool ok = false;
  std::string error;
  RunRecord record;
};
std::vector<SweepEntry> run_sweep(const ExperimentConfig& base, const std::string& axis,
                                  const std::vector<double>& values);

/// The JSON text written to summary.json (exposed for golden-file tests).
std::string summary_json(const ExperimentConfig& cfg, const RunRecord& rec);

}  // namespace radgas
