// radgas: pseudo-spectral laboratory for the radiating-gas model.
//
// Subcommands:
//   run <config>            run every suite enabled in the config
//   verify-linear <config>  run the linear (propagator-lemma) suite only
//   sweep <config> --axis <key> --values <v1,v2,...>
//   fit <norms.csv> [--theory E] [--tolerance T] [--log-correction] [--window lo hi]
// Exit code 0 iff every enabled verdict passes.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "radgas/config.hpp"
#include "radgas/errors.hpp"
#include "radgas/experiment.hpp"
#include "radgas/series.hpp"

namespace {

void print_record(const radgas::RunRecord& rec) {
  for (const auto& suite : rec.suites) {
    std::printf("suite %-18s %s\n", suite.suite.c_str(), suite.pass ? "pass" : "FAIL");
    for (const auto& c : suite.rate_checks) {
      if (!c.skip_reason.empty()) {
        std::printf("  %-34s skip (%s)\n", c.name.c_str(), c.skip_reason.c_str());
        continue;
      }
      std::printf("  %-34s theory %+0.3f fit %+0.4f tol %s%.2f  %s\n", c.name.c_str(),
                  c.theory, c.fitted, c.one_sided ? "+" : "+-", c.tolerance,
                  c.pass ? "pass" : "FAIL");
    }
    for (const auto& c : suite.scalar_checks)
      std::printf("  %-34s value %.3e %s %.3e  %s\n", c.name.c_str(), c.value,
                  c.comparison.c_str(), c.threshold, c.pass ? "pass" : "FAIL");
    for (const auto& [check, reason] : suite.skips)
      std::printf("  %-34s skip (%s)\n", check.c_str(), reason.c_str());
  }
  std::printf("overall: %s\n", rec.overall_pass ? "pass" : "FAIL");
  std::printf("outputs: %s\n", rec.output_dir.string().c_str());
}

radgas::NormSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw radgas::IoError("cannot open " + path);
  radgas::NormSeries s;
  s.kind = path;
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,value", 0) != 0)
    throw radgas::IoError("expected 't,value' header in " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw radgas::IoError("malformed CSV row: " + line);
    s.push(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral radiating-gas laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "experiment config file")->required();
    cmd->add_option("--set", overrides,
                    "override a config value, e.g. --set grid.points=512");
    cmd->add_option("--output-dir", out_dir, "override the output directory");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "run the configured suites");
  add_common(cmd_run);
  CLI::App* cmd_verify = app.add_subcommand("verify-linear", "run only the linear suite");
  add_common(cmd_verify);

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep one config key");
  add_common(cmd_sweep);
  std::string axis;
  std::string values_raw;
  cmd_sweep->add_option("--axis", axis, "dotted config key to sweep")->required();
  cmd_sweep->add_option("--values", values_raw, "comma-separated values")->required();

  CLI::App* cmd_fit = app.add_subcommand("fit", "fit a decay exponent to a norms CSV");
  std::string csv_path;
  double theory = 0.0, tolerance = 0.1, win_lo = -1.0, win_hi = -1.0;
  bool log_corr = false;
  CLI::Option* theory_opt =
      cmd_fit->add_option("--theory", theory, "theory exponent to compare against");
  cmd_fit->add_option("csv", csv_path, "CSV with header t,value")->required();
  cmd_fit->add_option("--tolerance", tolerance, "pass tolerance (default 0.1)");
  cmd_fit->add_flag("--log-correction", log_corr, "fit against ln(1+t)(1+t)^a");
  cmd_fit->add_option("--window-lo", win_lo, "fit window lower time");
  cmd_fit->add_option("--window-hi", win_hi, "fit window upper time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_fit->parsed()) {
      const radgas::NormSeries s = read_series_csv(csv_path);
      if (s.size() < 2) throw radgas::FitError("series has fewer than 2 samples");
      radgas::FitWindow w{win_lo >= 0 ? win_lo : s.times.front(),
                          win_hi >= 0 ? win_hi : s.times.back()};
      const radgas::DecayFit fit = radgas::fit_decay(s, w, log_corr);
      std::printf("{\"exponent\": %.10g, \"rms\": %.4g, \"points\": %d, \"decades\": %.3f",
                  fit.exponent, fit.rms, fit.points, fit.decades);
      if (theory_opt->count() > 0) {
        const bool pass = std::abs(fit.exponent - theory) <= tolerance;
        std::printf(", \"theory_exponent\": %.10g, \"tolerance\": %.3g, \"verdict\": \"%s\"}\n",
                    theory, tolerance, pass ? "pass" : "fail");
        return pass ? 0 : 1;
      }
      std::printf("}\n");
      return 0;
    }

    if (!out_dir.empty()) overrides.push_back("output.directory=" + out_dir);
    radgas::ExperimentConfig cfg = radgas::load_config(config_path, overrides);

    if (cmd_verify->parsed()) {
      cfg.suites = {radgas::Suite::Linear};
      cfg.validate();
    }

    if (cmd_sweep->parsed()) {
      std::vector<double> values;
      std::stringstream ss(values_raw);
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
      const auto entries = radgas::run_sweep(cfg, axis, values);
      bool all_ok = true;
      std::printf("%-18s %-8s %s\n", axis.c_str(), "status", "headline fits");
      for (const auto& e : entries) {
        if (!e.ok) {
          std::printf("%-18.8g %-8s %s\n", e.value, "error", e.error.c_str());
          all_ok = false;
          continue;
        }
        std::string fits;
        for (const auto& suite : e.record.suites)
          for (const auto& c : suite.rate_checks)
            if (c.skip_reason.empty() && fits.size() < 120)
              fits += c.name + "=" + std::to_string(c.fitted).substr(0, 7) + " ";
        std::printf("%-18.8g %-8s %s\n", e.value, e.record.overall_pass ? "pass" : "FAIL",
                    fits.c_str());
        all_ok = all_ok && e.record.overall_pass;
      }
      return all_ok ? 0 : 1;
    }

    const radgas::RunRecord rec = radgas::run_experiment(cfg);
    print_record(rec);
    return rec.overall_pass ? 0 : 1;
  } catch (const radgas::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const radgas::RegimeError& e) {
    std::fprintf(stderr, "regime error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
