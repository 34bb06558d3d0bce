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

#ifndef QSENSE_SWEEP_HPP
#define QSENSE_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsense/erasure.hpp"
#include "qsense/info.hpp"
#include "qsense/sensors.hpp"

namespace qsense {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Bad sweep configuration; `field` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class SweepOutput { Cmi, Icmax, Qmi, Conservation, Erasure1Bit, Erasure2Bit, BitEntropy, Schmidt };

std::string to_string(SweepOutput output);
std::optional<SweepOutput> parse_sweep_output(std::string_view text);

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  SensorFamily sensor = SensorFamily::SL;
  double start = 0.0;
  double stop = 1.5707963267948966;
  int count = 21;
  std::optional<MemoryPrep> memory;  // family default when unset
  std::optional<NoiseModel> noise;   // ideal, or the figure's default, when unset
  std::vector<SweepOutput> outputs{SweepOutput::Qmi};
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Csv;
  std::string matrix_path;  // custom sensors

  /// Throws ConfigError.
  void validate() const;
};

/// Strict reader: unknown keys, wrong types and malformed JSON are
/// ConfigErrors naming the key (or the line and column for syntax errors).
SweepConfig parse_config_json(std::string_view text);
nlohmann::ordered_json to_json(const SweepConfig& config);

struct FigureDataset {
  std::string figure_id;
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  nlohmann::ordered_json metadata;

  void add_column(std::string name, std::vector<double> values);
  const std::vector<double>& column(std::string_view name) const;

  /// Non-empty, equal column lengths, unique names, finite values.
  void validate() const;
};

/// Grid of `count` points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int count);

/// Requested outputs of the configured sensor at each grid point. Grid point
/// i draws its optimizer seed from config.seed + i.
FigureDataset run_sweep(const SweepConfig& config);

std::vector<std::string> figure_ids();

/// Canned theory curves. Grid, seed, sensor and noise come from `config`;
/// fig8_right defaults to NoiseModel::sl_experiment().
FigureDataset run_figure(std::string_view figure_id, const SweepConfig& config);

void write_csv(std::ostream& out, const FigureDataset& dataset);
void write_json(std::ostream& out, const FigureDataset& dataset);
void write_dataset(std::ostream& out, const FigureDataset& dataset, OutputFormat format);

/// Per-point table of the sweep followed by PASS/FAIL lines for the
/// conservation, qubit strength equality, erasure-bit bound and
/// controlled-SWAP suites. Returns true when every suite passes.
bool report(const SweepConfig& config, std::ostream& out);

}  // namespace qsense

#endif  // QSENSE_SWEEP_HPP
