#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "radgas/config.hpp"
#include "radgas/errors.hpp"
#include "radgas/field_io.hpp"
#include "radgas/series.hpp"
#include "test_support.hpp"

using namespace radgas;
using radgas::test::random_field;

namespace {
std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "radgas_test_io";
  std::filesystem::create_directories(dir);
  return dir;
}
}  // namespace

TEST_CASE("field dump/load round trip is bit exact") {
  Grid g(2, 48, 7.5);
  Field f = random_field(g, 99);
  const auto path = temp_dir() / "f.bin";
  dump_field(f, path);
  Field back = load_field(path);
  CHECK(back.grid == f.grid);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.values[i] == f.values[i]);
}

TEST_CASE("field header inspection without payload") {
  Grid g(3, 8, 2.0);
  Field f = random_field(g, 3);
  const auto path = temp_dir() / "h.bin";
  dump_field(f, path);
  FieldHeader h = read_field_header(path);
  CHECK(h.dim == 3);
  CHECK(h.points_per_axis == 8);
  CHECK(h.box_length == doctest::Approx(2.0));
  CHECK(h.payload_count == 512);
}

TEST_CASE("field load failure paths") {
  const auto dir = temp_dir();
  CHECK_THROWS_AS(load_field(dir / "missing.bin"), IoError);

  // corrupt magic
  const auto bad = dir / "bad.bin";
  {
    std::ofstream out(bad, std::ios::binary);
    out << "this is not a field file at all, just text";
  }
  CHECK_THROWS_AS(load_field(bad), IoError);

  // truncated payload
  Grid g(1, 64, 1.0);
  Field f = random_field(g, 5);
  const auto trunc = dir / "trunc.bin";
  dump_field(f, trunc);
  std::filesystem::resize_file(trunc, 40 + 100);  // header + a few doubles
  CHECK_THROWS_AS(load_field(trunc), IoError);
}

TEST_CASE("key/value config parsing with sections and overrides") {
  const std::string text =
      "# comment\n"
      "[grid]\n"
      "n = 2\n"
      "points = 64\n"
      "length = 40.0\n"
      "\n"
      "[initial_data]\n"
      "name = gaussian\n"
      "amplitude = 0.05  ; trailing comment\n"
      "width = 2.0\n"
      "[flux]\n"
      "name = burgers\n"
      "[suites]\n"
      "enabled = linear\n";
  KeyValueConfig kv = KeyValueConfig::parse_text(text);
  CHECK(kv.get_int("grid.n", 0) == 2);
  CHECK(kv.get_double("initial_data.amplitude", 0) == doctest::Approx(0.05));
  CHECK(kv.get_string("flux.name", "") == "burgers");

  ExperimentConfig cfg = ExperimentConfig::from_kv(kv);
  CHECK(cfg.dim == 2);
  CHECK(cfg.points == 64);
  CHECK(cfg.flux.name == "burgers");
  CHECK(cfg.suites.size() == 1);
  CHECK(cfg.suites[0] == Suite::Linear);
  CHECK(cfg.sobolev_order == 3);  // [n/2]+2 for n=2
  cfg.validate();

  CHECK_THROWS_AS(KeyValueConfig::parse_text("[grid\nn=2\n"), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::parse_text("just a line\n"), ConfigError);
}

TEST_CASE("config validation rejects bad setups") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "[grid]\nn = 1\npoints = 128\nlength = 48\n"
      "[initial_data]\nname = gaussian\namplitude = 0.05\nwidth = 2.0\n"
      "[suites]\nenabled = nonlinear-decay\n"
      "[integrator]\nt_end = 10\ndt = 0.05\n");

  CHECK_NOTHROW(ExperimentConfig::from_kv(kv).validate());

  // width below one grid spacing
  KeyValueConfig kv2 = kv;
  kv2.set("initial_data.width", "0.1");
  CHECK_THROWS_AS(ExperimentConfig::from_kv(kv2).validate(), ConfigError);

  // box too small for the horizon
  KeyValueConfig kv3 = kv;
  kv3.set("integrator.t_end", "100");
  CHECK_THROWS_AS(ExperimentConfig::from_kv(kv3).validate(), ConfigError);

  // profile suite needs s >= [n/2]+2
  KeyValueConfig kv4 = KeyValueConfig::parse_text(
      "[grid]\nn = 2\npoints = 128\nlength = 60\n"
      "[initial_data]\nname = gaussian\namplitude = 0.05\nwidth = 2.0\n"
      "[suites]\nenabled = profile\nsobolev_order = 2\n"
      "[integrator]\nt_end = 10\ndt = 0.05\n");
  CHECK_THROWS_AS(ExperimentConfig::from_kv(kv4).validate(), ConfigError);

  // sub-8-point width warns but passes
  KeyValueConfig kv5 = kv;
  kv5.set("initial_data.width", "1.0");  // dx = 0.3125 -> 3.2 points
  ExperimentConfig c5 = ExperimentConfig::from_kv(kv5);
  c5.validate();
  CHECK(c5.warnings.size() >= 1);
}

TEST_CASE("config hash: stable for identical configs, distinct otherwise") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "[grid]\nn = 1\npoints = 64\nlength = 30\n"
      "[initial_data]\nname = gaussian\namplitude = 0.01\nwidth = 1.5\n");
  ExperimentConfig a = ExperimentConfig::from_kv(kv);
  ExperimentConfig b = ExperimentConfig::from_kv(kv);
  CHECK(a.hash() == b.hash());
  KeyValueConfig kv2 = kv;
  kv2.set("grid.points", "128");
  CHECK(ExperimentConfig::from_kv(kv2).hash() != a.hash());
}

TEST_CASE("load_config applies overrides and validates") {
  const auto path = temp_dir() / "cfg.ini";
  {
    std::ofstream out(path);
    out << "[grid]\nn = 1\npoints = 64\nlength = 30\n"
        << "[initial_data]\nname = gaussian\namplitude = 0.01\nwidth = 1.5\n"
        << "[suites]\nenabled = linear\n";
  }
  ExperimentConfig cfg = load_config(path, {"grid.points=128"});
  CHECK(cfg.points == 128);
  CHECK_THROWS_AS(load_config(path, {"malformed-override"}), ConfigError);
  CHECK_THROWS_AS(load_config(temp_dir() / "nope.ini"), ConfigError);
}

TEST_CASE("geometric output times") {
  auto ts = geometric_times(0.1, 50.0, 1.5);
  CHECK(ts.front() == 0.0);
  CHECK(ts.back() == doctest::Approx(50.0));
  for (std::size_t i = 2; i + 1 < ts.size(); ++i) {
    const double r = (1 + ts[i + 1]) / (1 + ts[i]);
    CHECK(r == doctest::Approx(1.5).epsilon(0.35));  // last interval may be clipped
  }
  CHECK_THROWS_AS(geometric_times(0.0, 10.0, 1.5), ConfigError);
  CHECK_THROWS_AS(geometric_times(0.1, 10.0, 0.9), ConfigError);
}
