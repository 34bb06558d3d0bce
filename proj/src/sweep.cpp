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

#include "qsense/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <locale>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "qsense/random.hpp"
#include "qsense/schmidt.hpp"

namespace qsense {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::pair<SweepOutput, const char*>, 8> kOutputNames{{
    {SweepOutput::Cmi, "cmi"},
    {SweepOutput::Icmax, "icmax"},
    {SweepOutput::Qmi, "qmi"},
    {SweepOutput::Conservation, "conservation"},
    {SweepOutput::Erasure1Bit, "erasure_1bit"},
    {SweepOutput::Erasure2Bit, "erasure_2bit"},
    {SweepOutput::BitEntropy, "bit_entropy"},
    {SweepOutput::Schmidt, "schmidt"},
}};

std::string parameter_name(SensorFamily family) {
  switch (family) {
    case SensorFamily::CR: return "phi";
    case SensorFamily::SL: return "theta";
    default: return "param";
  }
}

double number_field(const std::string& key, const nlohmann::json& value) {
  if (!value.is_number()) throw ConfigError(key, "expected a number");
  return value.get<double>();
}

std::string string_field(const std::string& key, const nlohmann::json& value) {
  if (!value.is_string()) throw ConfigError(key, "expected a string");
  return value.get<std::string>();
}

NoiseModel parse_noise(const nlohmann::json& value) {
  if (!value.is_object()) throw ConfigError("noise", "expected an object");
  NoiseModel noise;
  for (const auto& [key, item] : value.items()) {
    if (key == "phase_jitter_sigma") {
      noise.phase_jitter_sigma = number_field("noise." + key, item);
    } else if (key == "bell_visibility") {
      noise.bell_visibility = number_field("noise." + key, item);
    } else {
      throw ConfigError("noise." + key, "unknown key");
    }
  }
  return noise;
}

/// Memory for the non-erasure outputs: the qubit preparations on M, or for
/// larger memories |0>, the uniform superposition or |Phi+> with M_A.
Ket sweep_memory(const BipartiteUnitary& u, MemoryPrep prep) {
  const int d = u.dim_m();
  if (d == 2) return memory_state(prep);
  switch (prep) {
    case MemoryPrep::Entangled:
      return Ket({{labels::M, d}, {labels::MA, d}}, basis::max_entangled(d));
    case MemoryPrep::PlusZ: {
      Vector v = Vector::Zero(d);
      v(0) = 1.0;
      return Ket({{labels::M, d}}, v);
    }
    case MemoryPrep::PlusX:
      return Ket({{labels::M, d}}, Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))));
  }
  throw ValidationError("unknown memory preparation");
}

bool is_qubit_pair(const BipartiteUnitary& u) { return u.dim_s() == 2 && u.dim_m() == 2; }

ErasureProtocol full_restoration_protocol(SensorFamily family, const BipartiteUnitary& u, double param) {
  if (family == SensorFamily::CR) return protocol_cr(param);
  if (family == SensorFamily::SL) return protocol_sl_2bit(param);
  return protocol_bell_heralded(u);
}

Ket erasure_memory(const ErasureProtocol& protocol) {
  return protocol.effects.front().rows() == 2 ? memory_state(MemoryPrep::PlusX)
                                              : memory_state(MemoryPrep::Entangled);
}

BipartiteUnitary sensor_at(const SweepConfig& config, const std::optional<BipartiteUnitary>& custom,
                           double param) {
  SensorSpec spec;
  spec.family = config.sensor;
  spec.parameter = param;
  spec.custom = custom;
  return build_sensor(spec);
}

std::optional<BipartiteUnitary> load_custom(const SweepConfig& config) {
  if (config.sensor != SensorFamily::CUSTOM) return std::nullopt;
  try {
    return load_custom_unitary(config.matrix_path);
  } catch (const std::exception& e) {
    throw ConfigError("matrix", e.what());
  }
}

std::string format_number(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(17) << v;
  return s.str();
}

ordered_json metadata_for(std::string_view figure_id, const SweepConfig& config) {
  ordered_json meta;
  meta["figure"] = figure_id;
  meta["version"] = kArtifactVersion;
  meta["config"] = to_json(config);
  return meta;
}

struct SuiteLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

void print_suite(std::ostream& out, const SuiteLine& line) {
  out << (line.pass ? "PASS " : "FAIL ") << line.name << ": " << line.detail << '\n';
}

std::string sci(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

SuiteLine conservation_suite(const SweepConfig& config, const std::optional<BipartiteUnitary>& custom) {
  const MemoryPrep prep = config.memory.value_or(default_memory_prep(config.sensor));
  double worst = conservation_report(build_cr(0.0), memory_state(prep)).conservation_defect;
  for (double p : linspace(config.start, config.stop, config.count)) {
    const auto u = sensor_at(config, custom, p);
    worst = std::max(worst, conservation_report(u, sweep_memory(u, prep)).conservation_defect);
  }
  return {"conservation", worst < 1e-9,
          "identity and " + std::to_string(config.count) + " " + to_string(config.sensor) +
              " points, max |acquired + residual - 2 log2 d_s| = " + sci(worst)};
}

SuiteLine strength_equality_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BipartiteUnitary u(2, 2, haar_unitary(4, rng));
    worst = std::max(worst, max_acquired_equals_strength_check(u).difference);
  }
  return {"qubit_strength_equality", worst < 1e-6,
          "100 Haar-random qubit-qubit unitaries, max |acquired - strength| = " + sci(worst)};
}

SuiteLine erasure_bound_suite(const SweepConfig& config) {
  struct Case {
    BipartiteUnitary u;
    ErasureProtocol protocol;
  };
  std::vector<Case> cases;
  const auto identity = build_cr(0.0);
  cases.push_back({identity, protocol_trivial(2, 2)});
  for (double p : linspace(0.0, std::numbers::pi / 2.0, config.count)) {
    cases.push_back({build_cr(p), protocol_cr(p)});
    cases.push_back({build_sl(p), protocol_sl_2bit(p)});
  }
  const auto swap = build_swap(2);
  cases.push_back({swap, protocol_bell_heralded(swap)});

  bool pass = true;
  double worst_restoration = 0.0;
  for (const auto& c : cases) {
    const auto result = run_erasure(c.u, c.protocol, NoiseModel::ideal(), erasure_memory(c.protocol));
    worst_restoration = std::max(worst_restoration, std::abs(result.post_restoration_info - 2.0));
    if (result.channel_bits + 1e-9 < required_channel_bits(c.u)) pass = false;
  }
  pass = pass && worst_restoration < 1e-9;
  return {"erasure_bit_bound", pass,
          std::to_string(cases.size()) +
              " restoring protocols (identity, CR grid, SL grid, SWAP) use at least log2(rank) bits; "
              "max |post - 2| = " + sci(worst_restoration)};
}

SuiteLine counterexample_suite() {
  const auto c = cswap_counterexample();
  const bool pass = std::abs(c.acquired - 2.0) < 1e-9 && std::abs(c.strength - c.acquired) > 0.1;
  return {"cswap_counterexample", pass,
          "acquired " + fixed(c.acquired) + " bits, Schmidt strength " + fixed(c.strength) +
              " bits; the quoted strength " + fixed(CswapCounterexample::kReportedStrength, 2) +
              " does not match the decomposition (difference " +
              fixed(CswapCounterexample::kReportedStrength - c.strength, 4) + " bits)"};
}

}  // namespace

std::string to_string(SweepOutput output) {
  for (const auto& [o, name] : kOutputNames) {
    if (o == output) return name;
  }
  return "unknown";
}

std::optional<SweepOutput> parse_sweep_output(std::string_view text) {
  for (const auto& [o, name] : kOutputNames) {
    if (text == name) return o;
  }
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (!std::isfinite(start)) throw ConfigError("start", "must be finite");
  if (!std::isfinite(stop)) throw ConfigError("stop", "must be finite");
  if (start > stop) throw ConfigError("start", "must not exceed stop");
  if (count < 2) throw ConfigError("points", "need at least 2 grid points");
  if (noise) {
    try {
      noise->validate();
    } catch (const ValidationError& e) {
      throw ConfigError("noise", e.what());
    }
  }
  if (outputs.empty()) throw ConfigError("outputs", "request at least one output");
  if (sensor == SensorFamily::CUSTOM && matrix_path.empty()) {
    throw ConfigError("matrix", "custom sensors need a matrix file");
  }
  if (sensor != SensorFamily::CUSTOM && !matrix_path.empty()) {
    throw ConfigError("matrix", "only custom sensors take a matrix file");
  }
}

SweepConfig parse_config_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");

  SweepConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "sensor") {
      const auto family = parse_sensor_family(string_field(key, value));
      if (!family) throw ConfigError(key, "unknown sensor family");
      c.sensor = *family;
    } else if (key == "start") {
      c.start = number_field(key, value);
    } else if (key == "stop") {
      c.stop = number_field(key, value);
    } else if (key == "points") {
      if (!value.is_number_integer()) throw ConfigError(key, "expected an integer");
      c.count = value.get<int>();
    } else if (key == "memory") {
      const auto prep = parse_memory_prep(string_field(key, value));
      if (!prep) throw ConfigError(key, "expected plus_x, plus_z or entangled");
      c.memory = *prep;
    } else if (key == "noise") {
      c.noise = parse_noise(value);
    } else if (key == "outputs") {
      if (!value.is_array()) throw ConfigError(key, "expected an array of names");
      c.outputs.clear();
      for (const auto& item : value) {
        const auto output = parse_sweep_output(string_field(key, item));
        if (!output) throw ConfigError(key, "unknown output '" + item.get<std::string>() + "'");
        c.outputs.push_back(*output);
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "format") {
      const auto format = string_field(key, value);
      if (format == "csv") {
        c.format = OutputFormat::Csv;
      } else if (format == "json") {
        c.format = OutputFormat::Json;
      } else {
        throw ConfigError(key, "expected csv or json");
      }
    } else if (key == "matrix") {
      c.matrix_path = string_field(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  c.validate();
  return c;
}

ordered_json to_json(const SweepConfig& config) {
  ordered_json j;
  j["sensor"] = to_string(config.sensor);
  j["start"] = config.start;
  j["stop"] = config.stop;
  j["points"] = config.count;
  if (config.memory) j["memory"] = to_string(*config.memory);
  if (config.noise) {
    j["noise"] = {{"phase_jitter_sigma", config.noise->phase_jitter_sigma},
                  {"bell_visibility", config.noise->bell_visibility}};
  }
  if (!config.outputs.empty()) {
    j["outputs"] = ordered_json::array();
    for (auto o : config.outputs) j["outputs"].push_back(to_string(o));
  }
  j["seed"] = config.seed;
  j["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
  if (!config.matrix_path.empty()) j["matrix"] = config.matrix_path;
  return j;
}

void FigureDataset::add_column(std::string name, std::vector<double> values) {
  columns.emplace_back(std::move(name), std::move(values));
}

const std::vector<double>& FigureDataset::column(std::string_view name) const {
  for (const auto& [n, values] : columns) {
    if (n == name) return values;
  }
  throw ValidationError("dataset " + figure_id + " has no column " + std::string(name));
}

void FigureDataset::validate() const {
  if (columns.empty()) throw ValidationError("dataset " + figure_id + " is empty");
  const auto rows = columns.front().second.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto& [name, values] = columns[i];
    if (values.size() != rows) throw ValidationError("column " + name + " has a different length");
    for (std::size_t k = 0; k < i; ++k) {
      if (columns[k].first == name) throw ValidationError("duplicate column " + name);
    }
    for (double v : values) {
      if (!std::isfinite(v)) throw ValidationError("column " + name + " holds a non-finite value");
    }
  }
}

std::vector<double> linspace(double start, double stop, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = i + 1 == count ? stop : start + (stop - start) * i / (count - 1);
  }
  return grid;
}

FigureDataset run_sweep(const SweepConfig& config) {
  config.validate();
  const auto custom = load_custom(config);
  const auto grid = linspace(config.start, config.stop, config.count);
  const MemoryPrep prep = config.memory.value_or(default_memory_prep(config.sensor));
  const NoiseModel noise = config.noise.value_or(NoiseModel::ideal());

  auto wants = [&](SweepOutput o) {
    return std::find(config.outputs.begin(), config.outputs.end(), o) != config.outputs.end();
  };
  const auto probe = sensor_at(config, custom, grid.front());
  if ((wants(SweepOutput::Cmi) || wants(SweepOutput::Icmax)) &&
      (!is_qubit_pair(probe) || prep == MemoryPrep::Entangled)) {
    throw ConfigError("outputs", "cmi and icmax need a qubit-qubit sensor and a single-qubit memory");
  }
  if (wants(SweepOutput::Erasure1Bit) && config.sensor != SensorFamily::CR && config.sensor != SensorFamily::SL) {
    throw ConfigError("outputs", "erasure_1bit is defined for the cr and sl sensors");
  }
  if ((wants(SweepOutput::Erasure2Bit) || wants(SweepOutput::BitEntropy)) && !is_qubit_pair(probe)) {
    throw ConfigError("outputs", "erasure_2bit and bit_entropy need a qubit-qubit sensor");
  }

  std::vector<std::pair<std::string, std::vector<double>>> cols;
  auto push = [&](const std::string& name, double v) {
    for (auto& [n, values] : cols) {
      if (n == name) {
        values.push_back(v);
        return;
      }
    }
    cols.emplace_back(name, std::vector<double>{v});
  };

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i];
    std::mt19937_64 rng(config.seed + i);
    const auto u = sensor_at(config, custom, p);
    const auto memory = sweep_memory(u, prep);
    std::vector<std::pair<std::string, double>> row{{parameter_name(config.sensor), p}};
    for (auto o : config.outputs) {
      switch (o) {
        case SweepOutput::Cmi: {
          const std::array<const char*, 3> names{"cmi_x", "cmi_y", "cmi_z"};
          for (int axis = 1; axis <= 3; ++axis) {
            row.emplace_back(names[axis - 1],
                             classical_mi_best_decode(u, pauli_eigenbasis(axis), memory.amplitudes(), rng).bits);
          }
          break;
        }
        case SweepOutput::Icmax:
          row.emplace_back("icmax", classical_mi_max(u, memory.amplitudes(), rng).bits);
          break;
        case SweepOutput::Qmi:
          row.emplace_back("acquired", acquired_information(u, memory));
          break;
        case SweepOutput::Conservation: {
          const auto r = conservation_report(u, memory);
          row.emplace_back("acquired", r.acquired);
          row.emplace_back("residual", r.residual);
          row.emplace_back("defect", r.conservation_defect);
          break;
        }
        case SweepOutput::Erasure1Bit: {
          const auto protocol = config.sensor == SensorFamily::CR ? protocol_cr(p) : protocol_sl_1bit(p);
          row.emplace_back("post_1bit", run_erasure(u, protocol, noise, erasure_memory(protocol)).post_restoration_info);
          break;
        }
        case SweepOutput::Erasure2Bit: {
          const auto protocol = config.sensor == SensorFamily::SL ? protocol_sl_2bit(p) : protocol_bell_heralded(u);
          row.emplace_back("post_2bit", run_erasure(u, protocol, noise, erasure_memory(protocol)).post_restoration_info);
          break;
        }
        case SweepOutput::BitEntropy: {
          const auto protocol = full_restoration_protocol(config.sensor, u, p);
          row.emplace_back("bit_entropy",
                           run_erasure(u, protocol, NoiseModel::ideal(), erasure_memory(protocol)).outcome_entropy);
          break;
        }
        case SweepOutput::Schmidt: {
          const auto d = schmidt_decompose(u);
          row.emplace_back("schmidt_rank", schmidt_rank(d));
          row.emplace_back("schmidt_strength", schmidt_strength(d));
          row.emplace_back("required_bits", std::log2(static_cast<double>(schmidt_rank(d))));
          break;
        }
      }
    }
    std::vector<std::string> seen;
    for (const auto& [name, v] : row) {
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      push(name, v);
    }
  }

  FigureDataset dataset;
  dataset.figure_id = "sweep";
  dataset.columns = std::move(cols);
  dataset.metadata = metadata_for(dataset.figure_id, config);
  dataset.validate();
  return dataset;
}

std::vector<std::string> figure_ids() {
  return {"fig2", "fig4", "fig5", "fig8_left", "fig8_right", "fig9"};
}

FigureDataset run_figure(std::string_view figure_id, const SweepConfig& config) {
  config.validate();
  const auto grid = linspace(config.start, config.stop, config.count);
  SweepConfig resolved = config;
  resolved.outputs.clear();
  FigureDataset dataset;
  dataset.figure_id = std::string(figure_id);

  if (figure_id == "fig2" || figure_id == "fig5") {
    resolved.outputs = {figure_id == "fig2" ? SweepOutput::Cmi : SweepOutput::Conservation};
    dataset.columns = run_sweep(resolved).columns;
  } else if (figure_id == "fig4") {
    std::vector<double> phi, icmax_cr, acquired_cr, theta, icmax_sl, acquired_sl;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::mt19937_64 rng(config.seed + i);
      const double t = std::numbers::pi / 2.0 - grid[i];
      const auto cr = build_cr(grid[i]);
      const auto sl = build_sl(t);
      const auto cr_memory = memory_state(default_memory_prep(SensorFamily::CR));
      const auto sl_memory = memory_state(default_memory_prep(SensorFamily::SL));
      phi.push_back(grid[i]);
      icmax_cr.push_back(classical_mi_max(cr, cr_memory.amplitudes(), rng).bits);
      acquired_cr.push_back(acquired_information(cr, cr_memory));
      theta.push_back(t);
      icmax_sl.push_back(classical_mi_max(sl, sl_memory.amplitudes(), rng).bits);
      acquired_sl.push_back(acquired_information(sl, sl_memory));
    }
    dataset.add_column("phi", std::move(phi));
    dataset.add_column("icmax_cr", std::move(icmax_cr));
    dataset.add_column("acquired_cr", std::move(acquired_cr));
    dataset.add_column("theta", std::move(theta));
    dataset.add_column("icmax_sl", std::move(icmax_sl));
    dataset.add_column("acquired_sl", std::move(acquired_sl));
  } else if (figure_id == "fig8_left") {
    const NoiseModel noise = config.noise.value_or(NoiseModel::ideal());
    const auto plus_x = memory_state(MemoryPrep::PlusX);
    const auto entangled = memory_state(MemoryPrep::Entangled);
    std::vector<double> acquired_cr, post_cr, acquired_sl, post_sl;
    for (double p : grid) {
      const auto cr = build_cr(p);
      const auto sl = build_sl(p);
      acquired_cr.push_back(acquired_information(cr, plus_x));
      post_cr.push_back(run_erasure(cr, protocol_cr(p), noise, plus_x).post_restoration_info);
      acquired_sl.push_back(acquired_information(sl, entangled));
      post_sl.push_back(run_erasure(sl, protocol_sl_1bit(p), noise, entangled).post_restoration_info);
    }
    dataset.add_column("phi", grid);
    dataset.add_column("acquired_cr", std::move(acquired_cr));
    dataset.add_column("post_cr", std::move(post_cr));
    dataset.add_column("theta", grid);
    dataset.add_column("acquired_sl", std::move(acquired_sl));
    dataset.add_column("post_sl_1bit", std::move(post_sl));
  } else if (figure_id == "fig8_right") {
    const NoiseModel noise = config.noise.value_or(NoiseModel::sl_experiment());
    resolved.noise = noise;
    const auto entangled = memory_state(MemoryPrep::Entangled);
    std::vector<double> acquired, residual, post_ideal, post_noisy;
    for (double t : grid) {
      const auto sl = build_sl(t);
      const auto protocol = protocol_sl_2bit(t);
      acquired.push_back(acquired_information(sl, entangled));
      residual.push_back(info_report(apply_noise(choi_state(sl, entangled), noise)).residual);
      post_ideal.push_back(run_erasure(sl, protocol, NoiseModel::ideal(), entangled).post_restoration_info);
      post_noisy.push_back(run_erasure(sl, protocol, noise, entangled).post_restoration_info);
    }
    dataset.add_column("theta", grid);
    dataset.add_column("acquired_sl", std::move(acquired));
    dataset.add_column("residual_no_erasure", std::move(residual));
    dataset.add_column("post_ideal", std::move(post_ideal));
    dataset.add_column("post_noisy", std::move(post_noisy));
  } else if (figure_id == "fig9") {
    std::vector<double> entropy, required;
    for (const auto& [t, h] : erasure_bit_entropy_curve(grid)) {
      entropy.push_back(h);
      required.push_back(required_channel_bits(build_sl(t)));
    }
    dataset.add_column("theta", grid);
    dataset.add_column("bit_entropy", std::move(entropy));
    dataset.add_column("required_bits", std::move(required));
  } else {
    throw ConfigError("figure", "unknown figure '" + std::string(figure_id) + "'");
  }

  dataset.metadata = metadata_for(figure_id, resolved);
  dataset.validate();
  return dataset;
}

void write_csv(std::ostream& out, const FigureDataset& dataset) {
  dataset.validate();
  for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
    out << (c ? "," : "") << dataset.columns[c].first;
  }
  out << '\n';
  const auto rows = dataset.columns.front().second.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
      out << (c ? "," : "") << format_number(dataset.columns[c].second[r]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const FigureDataset& dataset) {
  dataset.validate();
  ordered_json j;
  j["figure"] = dataset.figure_id;
  j["metadata"] = dataset.metadata;
  j["columns"] = ordered_json::object();
  for (const auto& [name, values] : dataset.columns) j["columns"][name] = values;
  out << j.dump(2) << '\n';
}

void write_dataset(std::ostream& out, const FigureDataset& dataset, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(out, dataset);
  } else {
    write_json(out, dataset);
  }
}

bool report(const SweepConfig& config, std::ostream& out) {
  const auto dataset = run_sweep(config);
  for (const auto& [name, values] : dataset.columns) out << std::setw(18) << name;
  out << '\n';
  for (std::size_t r = 0; r < dataset.columns.front().second.size(); ++r) {
    for (const auto& column : dataset.columns) out << std::setw(18) << fixed(column.second[r], 9);
    out << '\n';
  }
  out << '\n';

  const std::array<SuiteLine, 4> suites{conservation_suite(config, load_custom(config)),
                                        strength_equality_suite(config.seed), erasure_bound_suite(config),
                                        counterexample_suite()};
  bool all = true;
  for (const auto& s : suites) {
    print_suite(out, s);
    all = all && s.pass;
  }
  return all;
}

}  // namespace qsense
