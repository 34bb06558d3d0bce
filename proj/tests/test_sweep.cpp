// Copyright 2026 The qsense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qsense/sweep.hpp"

using namespace qsense;

namespace {

constexpr double kPi = std::numbers::pi;

std::string config_error_field(const std::string& text) {
  try {
    parse_config_json(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

SweepConfig small(SensorFamily sensor, int count = 5) {
  SweepConfig c;
  c.sensor = sensor;
  c.count = count;
  return c;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(QSENSE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config_json(R"({"sensor": "cr", "start": 0.1, "stop": 1.0, "points": 7,
    "memory": "entangled", "noise": {"phase_jitter_sigma": 0.2}, "outputs": ["qmi", "schmidt"],
    "seed": 9, "format": "json"})");
  CHECK(c.sensor == SensorFamily::CR);
  CHECK(c.count == 7);
  CHECK(c.memory == MemoryPrep::Entangled);
  REQUIRE(c.noise.has_value());
  CHECK(c.noise->phase_jitter_sigma == 0.2);
  CHECK(c.noise->bell_visibility == 1.0);
  CHECK(c.outputs.size() == 2);
  CHECK(c.seed == 9);
  CHECK(c.format == OutputFormat::Json);
  CHECK(parse_config_json(to_json(c).dump()).count == 7);
}

TEST_CASE("config errors name the offending field") {
  CHECK(config_error_field(R"({"sensor": "toffoli"})") == "sensor");
  CHECK(config_error_field(R"({"points": 1})") == "points");
  CHECK(config_error_field(R"({"points": "many"})") == "points");
  CHECK(config_error_field(R"({"colour": "blue"})") == "colour");
  CHECK(config_error_field(R"({"noise": {"bell_visibility": 2}})") == "noise");
  CHECK(config_error_field(R"({"noise": {"visibility": 1}})") == "noise.visibility");
  CHECK(config_error_field(R"({"outputs": ["qmi", "entanglement"]})") == "outputs");
  CHECK(config_error_field(R"({"start": 1, "stop": 0})") == "start");
  CHECK(config_error_field(R"({"sensor": "custom"})") == "matrix");
  CHECK(config_error_field("{\"points\": 3,\n  oops}") == "config");
  CHECK(config_error_field("[1, 2]") == "config");
}

TEST_CASE("linspace") {
  const auto g = linspace(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == doctest::Approx(0.5));
}

TEST_CASE("dataset validation") {
  FigureDataset d;
  d.add_column("a", {1.0, 2.0});
  CHECK_NOTHROW(d.validate());
  FigureDataset duplicate = d;
  duplicate.add_column("a", {3.0, 4.0});
  CHECK_THROWS(duplicate.validate());
  d.add_column("b", {1.0});
  CHECK_THROWS(d.validate());
  FigureDataset nan;
  nan.add_column("a", {std::numeric_limits<double>::quiet_NaN()});
  CHECK_THROWS(nan.validate());
  CHECK_THROWS(FigureDataset{}.validate());
  CHECK_THROWS(d.column("missing"));
}

TEST_CASE("conservation sweep") {
  auto c = small(SensorFamily::SL, 11);
  c.memory = MemoryPrep::Entangled;
  const auto d = run_figure("fig5", c);
  for (double defect : d.column("defect")) CHECK(defect < 1e-9);
  CHECK(d.columns.front().first == "theta");
}

TEST_CASE("CMI sweep of the controlled rotation") {
  const auto d = run_figure("fig2", small(SensorFamily::CR));
  for (double v : d.column("cmi_y")) CHECK(std::abs(v) < 1e-9);
  for (double v : d.column("cmi_z")) CHECK(std::abs(v) < 1e-9);
  CHECK(d.column("cmi_x").back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d.columns.front().first == "phi");
}

TEST_CASE("bit entropy sweep falls from two to zero") {
  const auto d = run_figure("fig9", small(SensorFamily::SL, 9));
  const auto& e = d.column("bit_entropy");
  CHECK(e.front() == doctest::Approx(2.0));
  CHECK(e.back() == doctest::Approx(0.0));
  for (std::size_t k = 1; k < e.size(); ++k) CHECK(e[k] < e[k - 1]);
}

TEST_CASE("erasure figure columns") {
  const auto right = run_figure("fig8_right", small(SensorFamily::SL));
  for (double v : right.column("post_ideal")) CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  for (double v : right.column("post_noisy")) CHECK(v < 2.0);
  const auto left = run_figure("fig8_left", small(SensorFamily::SL));
  for (double v : left.column("post_cr")) CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(run_figure("fig7", small(SensorFamily::SL)), ConfigError);
}

TEST_CASE("incompatible outputs are rejected") {
  auto c = small(SensorFamily::SWAP);
  c.outputs = {SweepOutput::Erasure1Bit};
  CHECK_THROWS_AS(run_sweep(c), ConfigError);
}

TEST_CASE("csv keeps full precision") {
  FigureDataset d;
  d.figure_id = "t";
  d.add_column("x", {kPi, 1.0 / 3.0, 1e-300});
  std::ostringstream out;
  write_csv(out, d);
  std::istringstream in(out.str());
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "x");
  for (double expected : d.column("x")) {
    std::getline(in, line);
    CHECK(std::stod(line) == expected);
  }
}

TEST_CASE("json output structure") {
  const auto d = run_figure("fig9", small(SensorFamily::SL, 3));
  std::ostringstream out;
  write_json(out, d);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["figure"] == "fig9");
  CHECK(j["metadata"]["version"] == kArtifactVersion);
  CHECK(j["columns"]["theta"].size() == 3);
}

TEST_CASE("sweeps are deterministic") {
  auto c = small(SensorFamily::SL, 3);
  c.outputs = {SweepOutput::Icmax, SweepOutput::Cmi};
  std::ostringstream a, b;
  write_csv(a, run_sweep(c));
  write_csv(b, run_sweep(c));
  CHECK(a.str() == b.str());
}

TEST_CASE("report on the identity") {
  auto c = small(SensorFamily::CR, 2);
  c.start = 1.0;
  c.stop = 0.0;
  std::ostringstream out;
  CHECK_THROWS_AS(report(c, out), ConfigError);
  c.start = 0.0;
  c.stop = 1e-3;
  std::ostringstream ok;
  CHECK(report(c, ok));
  CHECK(ok.str().find("PASS conservation") != std::string::npos);
  CHECK(ok.str().find("FAIL") == std::string::npos);
}

TEST_CASE("command-line exit codes") {
  const auto dir = std::filesystem::temp_directory_path() / "qsense_test_sweep";
  std::filesystem::create_directories(dir);
  CHECK(run_cli("figure fig9 --points 3 --out " + (dir / "f.csv").string()) == 0);
  CHECK(std::filesystem::file_size(dir / "f.csv") > 0);
  CHECK(run_cli("sweep --sensor cr --points 3 --outputs conservation") == 0);
  CHECK(run_cli("sweep --points 1") == 2);
  CHECK(run_cli("sweep --sensor toffoli") == 2);
  CHECK(run_cli("sweep --outputs nonsense") == 2);
  CHECK(run_cli("figure nope") == 2);
  CHECK(run_cli("--bogus") == 2);
  {
    std::ofstream bad(dir / "bad.json");
    bad << R"({"points": 3, "unknown": 1})";
  }
  CHECK(run_cli("sweep --config " + (dir / "bad.json").string()) == 2);
  CHECK(run_cli("schmidt --sensor sl --param 0.2") == 0);
  CHECK(run_cli("erase --sensor sl --param 0.2 --protocol sl_2bit") == 0);
  std::filesystem::remove_all(dir);
}
