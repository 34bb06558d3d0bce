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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsense/erasure.hpp"
#include "qsense/info.hpp"
#include "qsense/schmidt.hpp"
#include "qsense/sweep.hpp"

namespace {

using namespace qsense;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config_path;
  std::string sensor;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  std::string memory;
  std::vector<std::string> outputs;
  double sigma = 0.0;
  double visibility = 1.0;
  std::uint64_t seed = 0;
  std::string format;
  std::string out_path;
  std::string matrix;

  struct {
    CLI::Option* sensor = nullptr;
    CLI::Option* start = nullptr;
    CLI::Option* stop = nullptr;
    CLI::Option* points = nullptr;
    CLI::Option* memory = nullptr;
    CLI::Option* outputs = nullptr;
    CLI::Option* sigma = nullptr;
    CLI::Option* visibility = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* matrix = nullptr;
  } given;
};

void add_sweep_options(CLI::App* app, Flags& f, bool with_outputs) {
  app->add_option("--config", f.config_path, "JSON sweep configuration; flags override it")->check(CLI::ExistingFile);
  f.given.sensor = app->add_option("--sensor", f.sensor, "cr, sl, swap, cswap or custom");
  f.given.start = app->add_option("--start", f.start, "first grid value (radians)");
  f.given.stop = app->add_option("--stop", f.stop, "last grid value (radians)");
  f.given.points = app->add_option("--points", f.points, "grid points");
  f.given.memory = app->add_option("--memory", f.memory, "plus_x, plus_z or entangled");
  if (with_outputs) {
    f.given.outputs = app->add_option("--outputs", f.outputs, "cmi icmax qmi conservation erasure_1bit erasure_2bit bit_entropy schmidt")
                          ->delimiter(',');
  }
  f.given.sigma = app->add_option("--sigma", f.sigma, "phase jitter std (radians)");
  f.given.visibility = app->add_option("--visibility", f.visibility, "two-photon visibility");
  f.given.seed = app->add_option("--seed", f.seed, "optimizer seed");
  f.given.format = app->add_option("--format", f.format, "csv or json");
  f.given.matrix = app->add_option("--matrix", f.matrix, "matrix file for the custom sensor");
  app->add_option("--out", f.out_path, "output file (default stdout)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SweepConfig resolve(const Flags& f) {
  SweepConfig c = f.config_path.empty() ? SweepConfig{} : parse_config_json(read_file(f.config_path));
  const auto& g = f.given;
  if (g.sensor && g.sensor->count()) {
    const auto family = parse_sensor_family(f.sensor);
    if (!family) throw ConfigError("sensor", "unknown sensor family '" + f.sensor + "'");
    c.sensor = *family;
  }
  if (g.start && g.start->count()) c.start = f.start;
  if (g.stop && g.stop->count()) c.stop = f.stop;
  if (g.points && g.points->count()) c.count = f.points;
  if (g.memory && g.memory->count()) {
    const auto prep = parse_memory_prep(f.memory);
    if (!prep) throw ConfigError("memory", "expected plus_x, plus_z or entangled");
    c.memory = *prep;
  }
  if (g.outputs && g.outputs->count()) {
    c.outputs.clear();
    for (const auto& name : f.outputs) {
      const auto o = parse_sweep_output(name);
      if (!o) throw ConfigError("outputs", "unknown output '" + name + "'");
      c.outputs.push_back(*o);
    }
  }
  if ((g.sigma && g.sigma->count()) || (g.visibility && g.visibility->count())) {
    NoiseModel noise = c.noise.value_or(NoiseModel::ideal());
    if (g.sigma->count()) noise.phase_jitter_sigma = f.sigma;
    if (g.visibility->count()) noise.bell_visibility = f.visibility;
    c.noise = noise;
  }
  if (g.seed && g.seed->count()) c.seed = f.seed;
  if (g.format && g.format->count()) {
    if (f.format == "csv") {
      c.format = OutputFormat::Csv;
    } else if (f.format == "json") {
      c.format = OutputFormat::Json;
    } else {
      throw ConfigError("format", "expected csv or json");
    }
  }
  if (g.matrix && g.matrix->count()) c.matrix_path = f.matrix;
  c.validate();
  return c;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("out", "cannot write " + path);
  out << text;
}

BipartiteUnitary single_sensor(const std::string& sensor, double param, const std::string& matrix) {
  const auto family = parse_sensor_family(sensor);
  if (!family) throw ConfigError("sensor", "unknown sensor family '" + sensor + "'");
  SensorSpec spec;
  spec.family = *family;
  spec.parameter = param;
  if (*family == SensorFamily::CUSTOM) {
    if (matrix.empty()) throw ConfigError("matrix", "custom sensors need a matrix file");
    try {
      spec.custom = load_custom_unitary(matrix);
    } catch (const std::exception& e) {
      throw ConfigError("matrix", e.what());
    }
  }
  return build_sensor(spec);
}

int run_schmidt(const std::string& sensor, double param, const std::string& matrix) {
  const auto u = single_sensor(sensor, param, matrix);
  const auto d = schmidt_decompose(u);
  const int rank = schmidt_rank(d);
  std::cout << std::setprecision(12);
  std::cout << "sensor " << sensor << " (d_s = " << u.dim_s() << ", d_m = " << u.dim_m() << ")\n";
  for (int i = 0; i < rank; ++i) {
    std::cout << "lambda_" << i + 1 << " " << d.lambdas(i) << "  p = " << d.lambdas(i) * d.lambdas(i) << '\n';
  }
  std::cout << "rank " << rank << '\n'
            << "strength_bits " << schmidt_strength(d) << '\n'
            << "required_channel_bits " << std::log2(static_cast<double>(rank)) << '\n';
  return 0;
}

int run_erase(const std::string& sensor, double param, const std::string& protocol_name,
              const NoiseModel& noise, const std::string& matrix) {
  const auto u = single_sensor(sensor, param, matrix);
  ErasureProtocol protocol;
  std::string name = protocol_name;
  if (name.empty()) name = sensor == "cr" ? "cr_1bit" : sensor == "sl" ? "sl_2bit" : "bell";
  if (name == "cr_1bit") {
    protocol = protocol_cr(param);
  } else if (name == "sl_1bit") {
    protocol = protocol_sl_1bit(param);
  } else if (name == "sl_2bit") {
    protocol = protocol_sl_2bit(param);
  } else if (name == "bell") {
    protocol = protocol_bell_heralded(u);
  } else {
    throw ConfigError("protocol", "expected cr_1bit, sl_1bit, sl_2bit or bell");
  }
  noise.validate();
  const auto memory = protocol.effects.front().rows() == 2 ? memory_state(MemoryPrep::PlusX)
                                                           : memory_state(MemoryPrep::Entangled);
  const auto r = run_erasure(u, protocol, noise, memory);
  std::cout << std::setprecision(12);
  std::cout << "protocol " << name << '\n' << "post_restoration_info " << r.post_restoration_info << '\n';
  std::cout << "outcome_probs";
  for (double p : r.outcome_probs) std::cout << ' ' << p;
  std::cout << '\n'
            << "outcome_entropy " << r.outcome_entropy << '\n'
            << "channel_bits " << r.channel_bits << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite sensor simulator: information measures, Schmidt structure and erasure"};
  app.require_subcommand(1);

  Flags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "evaluate outputs over a grid of the tuning angle");
  add_sweep_options(sweep, sweep_flags, true);

  Flags figure_flags;
  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "theory curves for a canned figure");
  figure->add_option("id", figure_id, "fig2, fig4, fig5, fig8_left, fig8_right or fig9")->required();
  add_sweep_options(figure, figure_flags, false);

  std::string schmidt_sensor = "sl";
  std::string schmidt_matrix;
  double schmidt_param = 0.0;
  auto* schmidt = app.add_subcommand("schmidt", "operator-Schmidt decomposition of one sensor");
  schmidt->add_option("--sensor", schmidt_sensor, "cr, sl, swap, cswap or custom");
  schmidt->add_option("--param", schmidt_param, "tuning angle (radians)");
  schmidt->add_option("--matrix", schmidt_matrix, "matrix file for the custom sensor");

  std::string erase_sensor = "sl";
  std::string erase_protocol;
  std::string erase_matrix;
  double erase_param = 0.0;
  NoiseModel erase_noise;
  auto* erase = app.add_subcommand("erase", "run one erasure protocol");
  erase->add_option("--sensor", erase_sensor, "cr, sl, swap or custom (qubit-qubit)");
  erase->add_option("--param", erase_param, "tuning angle (radians)");
  erase->add_option("--protocol", erase_protocol, "cr_1bit, sl_1bit, sl_2bit or bell");
  erase->add_option("--sigma", erase_noise.phase_jitter_sigma, "phase jitter std (radians)");
  erase->add_option("--visibility", erase_noise.bell_visibility, "two-photon visibility");
  erase->add_option("--matrix", erase_matrix, "matrix file for the custom sensor");

  Flags check_flags;
  auto* check = app.add_subcommand("check", "per-point table and invariant suites");
  add_sweep_options(check, check_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sweep) {
      const auto config = resolve(sweep_flags);
      std::ostringstream text;
      write_dataset(text, run_sweep(config), config.format);
      emit(sweep_flags.out_path, text.str());
    } else if (*figure) {
      const auto ids = figure_ids();
      if (std::find(ids.begin(), ids.end(), figure_id) == ids.end()) {
        throw ConfigError("figure", "unknown figure '" + figure_id + "'");
      }
      const auto config = resolve(figure_flags);
      std::ostringstream text;
      write_dataset(text, run_figure(figure_id, config), config.format);
      emit(figure_flags.out_path, text.str());
    } else if (*schmidt) {
      return run_schmidt(schmidt_sensor, schmidt_param, schmidt_matrix);
    } else if (*erase) {
      return run_erase(erase_sensor, erase_param, erase_protocol, erase_noise, erase_matrix);
    } else if (*check) {
      const auto config = resolve(check_flags);
      std::ostringstream text;
      const bool pass = report(config, text);
      emit(check_flags.out_path, text.str());
      return pass ? 0 : kExitSuiteFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "qsense: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
