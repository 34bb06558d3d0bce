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

#include "qsense/info.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <tuple>

#include "qsense/nelder_mead.hpp"

namespace qsense {

namespace {

using Joint = std::array<std::array<double, 2>, 2>;

constexpr double kDegree = std::numbers::pi / 180.0;

double plogp_sum(std::initializer_list<double> values) {
  double h = 0.0;
  for (double v : values) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double cmi_from_joint(Joint p) {
  for (auto& row : p) {
    for (auto& v : row) v = std::max(v, 0.0);
  }
  const double hx = plogp_sum({p[0][0] + p[0][1], p[1][0] + p[1][1]});
  const double hy = plogp_sum({p[0][0] + p[1][0], p[0][1] + p[1][1]});
  const double hxy = plogp_sum({p[0][0], p[0][1], p[1][0], p[1][1]});
  return std::max(hx + hy - hxy, 0.0);
}

// Memory marginal Tr_S[U (|x><x| (x) |m><m|) U^dagger].
Matrix memory_output(const BipartiteUnitary& u, const Vector& x, const Vector& memory) {
  const Vector out = u.matrix() * kron(x, memory);
  const Eigen::Map<const Matrix> amplitudes(out.data(), u.dim_m(), u.dim_s());
  return amplitudes * amplitudes.adjoint();
}

double cmi_with_outputs(const std::array<Matrix, 2>& outputs, const BasisPair& decode) {
  Joint p{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      p[x][y] = 0.5 * (decode[y].adjoint() * outputs[x] * decode[y])(0, 0).real();
    }
  }
  return cmi_from_joint(p);
}

struct BlochAngles {
  double polar;
  double azimuth;
};

std::vector<BlochAngles> bloch_grid(double step_degrees) {
  const int polar_steps = std::max(1, static_cast<int>(std::lround(180.0 / step_degrees)));
  const int azimuth_steps = std::max(1, static_cast<int>(std::lround(360.0 / step_degrees)));
  std::vector<BlochAngles> grid;
  for (int i = 0; i <= polar_steps; ++i) {
    const double polar = std::numbers::pi * i / polar_steps;
    const bool pole = (i == 0 || i == polar_steps);
    for (int j = 0; j < (pole ? 1 : azimuth_steps); ++j) {
      grid.push_back({polar, 2.0 * std::numbers::pi * j / azimuth_steps});
    }
  }
  return grid;
}

BlochAngles angles_of(const Vector& v) {
  const double a = std::abs(v(0));
  const double polar = 2.0 * std::acos(std::clamp(a, 0.0, 1.0));
  const double azimuth = (std::abs(v(1)) > 0.0 && a > 0.0) ? std::arg(v(1)) - std::arg(v(0)) : 0.0;
  return {polar, azimuth};
}

void check_qubit_pair(const BipartiteUnitary& u) {
  if (u.dim_s() != 2 || u.dim_m() != 2) {
    throw ValidationError("classical mutual information needs a qubit-qubit sensor");
  }
}

// Maps an angle vector onto a readout setting for the simplex refinement.
struct Search {
  std::function<CmiSetting(const Eigen::VectorXd&)> to_setting;
  const BipartiteUnitary* u = nullptr;
};

CmiMaxResult refine(const Search& search, std::vector<Eigen::VectorXd> starts, std::mt19937_64& rng,
                    const CmiMaxOptions& options) {
  const double step = options.grid_step_degrees * kDegree;
  auto objective = [&](const Eigen::VectorXd& angles) {
    return -classical_mi(*search.u, search.to_setting(angles));
  };
  NelderMeadOptions nm;
  nm.initial_step = step / 2.0;
  nm.f_tolerance = options.tolerance * 1e-3;
  nm.x_tolerance = 1e-9;
  nm.max_evaluations = 4000;

  Eigen::VectorXd best_x = starts.front();
  double best = -objective(best_x);
  for (const auto& start : starts) {
    const auto result = nelder_mead<double>(objective, start, nm);
    if (-result.value > best) {
      best = -result.value;
      best_x = result.x;
    }
  }

  std::normal_distribution<double> jitter(0.0, step / 2.0);
  double spread = 0.0;
  for (int round = 0; round < 8; ++round) {
    double round_max = -1.0;
    double round_min = 2.0;
    Eigen::VectorXd round_x = best_x;
    for (int r = 0; r < options.restarts; ++r) {
      Eigen::VectorXd start = best_x;
      for (auto& a : start) a += jitter(rng);
      const auto result = nelder_mead<double>(objective, start, nm);
      const double value = -result.value;
      round_min = std::min(round_min, value);
      if (value > round_max) {
        round_max = value;
        round_x = result.x;
      }
    }
    spread = options.restarts > 0 ? round_max - round_min : 0.0;
    if (round_max > best + options.tolerance) {
      best = round_max;
      best_x = round_x;
      continue;
    }
    if (round_max > best) {
      best = round_max;
      best_x = round_x;
    }
    break;
  }
  return {best, search.to_setting(best_x), spread};
}

template <typename Score>
std::vector<std::size_t> top_indices(std::size_t count, std::size_t keep, Score score) {
  std::vector<std::pair<double, std::size_t>> scored(count);
  for (std::size_t i = 0; i < count; ++i) scored[i] = {score(i), i};
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(keep, count); ++i) out.push_back(scored[i].second);
  return out;
}

}  // namespace

BasisPair bloch_pair(double polar, double azimuth) {
  const double c = std::cos(polar / 2.0);
  const double s = std::sin(polar / 2.0);
  Vector first(2);
  Vector second(2);
  first << c, std::polar(s, azimuth);
  second << -std::polar(s, -azimuth), c;
  return {first, second};
}

BasisPair pauli_eigenbasis(int axis) {
  switch (axis) {
    case 1: return {basis::plus_x(), basis::minus_x()};
    case 2: return {basis::plus_y(), basis::minus_y()};
    case 3: return {basis::plus_z(), basis::minus_z()};
    default: throw ValidationError("pauli_eigenbasis: axis must be 1, 2 or 3");
  }
}

void CmiSetting::validate() const {
  auto check_pair = [](const BasisPair& pair, const char* what) {
    if (pair[0].size() != pair[1].size()) throw ValidationError(std::string(what) + " pair size mismatch");
    const double err = std::max({std::abs(pair[0].squaredNorm() - 1.0), std::abs(pair[1].squaredNorm() - 1.0),
                                 std::abs(pair[0].dot(pair[1]))});
    if (err > kStateTolerance) throw ValidationError(std::string(what) + " pair is not orthonormal");
  };
  check_pair(encode, "encode");
  check_pair(decode, "decode");
  if (decode[0].size() != 2) throw ValidationError("decode pair must span a qubit memory");
  if (std::abs(initial_memory.squaredNorm() - 1.0) > kStateTolerance) {
    throw ValidationError("initial memory is not normalized");
  }
}

double classical_mi(const BipartiteUnitary& u, const CmiSetting& setting) {
  setting.validate();
  if (setting.encode[0].size() != u.dim_s() || setting.decode[0].size() != u.dim_m() ||
      setting.initial_memory.size() != u.dim_m()) {
    throw ValidationError("classical_mi: setting dimensions do not match the sensor");
  }
  const std::array<Matrix, 2> outputs{memory_output(u, setting.encode[0], setting.initial_memory),
                                      memory_output(u, setting.encode[1], setting.initial_memory)};
  return cmi_with_outputs(outputs, setting.decode);
}

CmiMaxResult classical_mi_max(const BipartiteUnitary& u, const Vector& initial_memory,
                              std::mt19937_64& rng, const CmiMaxOptions& options) {
  check_qubit_pair(u);
  const auto grid = bloch_grid(options.grid_step_degrees);
  std::vector<BasisPair> pairs;
  pairs.reserve(grid.size());
  for (const auto& g : grid) pairs.push_back(bloch_pair(g.polar, g.azimuth));

  std::vector<std::array<Matrix, 2>> outputs;
  outputs.reserve(grid.size());
  for (const auto& pair : pairs) {
    outputs.push_back({memory_output(u, pair[0], initial_memory), memory_output(u, pair[1], initial_memory)});
  }

  const std::size_t n = grid.size();
  const auto top = top_indices(n * n, static_cast<std::size_t>(options.refine_from_best),
                               [&](std::size_t k) { return cmi_with_outputs(outputs[k / n], pairs[k % n]); });

  const BlochAngles memory_angles = angles_of(initial_memory);
  Search search;
  search.u = &u;
  search.to_setting = [&, optimize = options.optimize_memory](const Eigen::VectorXd& a) {
    CmiSetting s{bloch_pair(a(0), a(1)), bloch_pair(a(2), a(3)), initial_memory};
    if (optimize) s.initial_memory = bloch_pair(a(4), a(5))[0];
    return s;
  };

  std::vector<Eigen::VectorXd> starts;
  for (auto k : top) {
    Eigen::VectorXd x(options.optimize_memory ? 6 : 4);
    x(0) = grid[k / n].polar;
    x(1) = grid[k / n].azimuth;
    x(2) = grid[k % n].polar;
    x(3) = grid[k % n].azimuth;
    if (options.optimize_memory) {
      x(4) = memory_angles.polar;
      x(5) = memory_angles.azimuth;
    }
    starts.push_back(std::move(x));
  }
  return refine(search, std::move(starts), rng, options);
}

CmiMaxResult classical_mi_best_decode(const BipartiteUnitary& u, const BasisPair& encode,
                                      const Vector& initial_memory, std::mt19937_64& rng,
                                      const CmiMaxOptions& options) {
  check_qubit_pair(u);
  const auto grid = bloch_grid(options.grid_step_degrees);
  const std::array<Matrix, 2> outputs{memory_output(u, encode[0], initial_memory),
                                      memory_output(u, encode[1], initial_memory)};
  const auto top = top_indices(grid.size(), static_cast<std::size_t>(options.refine_from_best), [&](std::size_t k) {
    return cmi_with_outputs(outputs, bloch_pair(grid[k].polar, grid[k].azimuth));
  });

  Search search;
  search.u = &u;
  search.to_setting = [&](const Eigen::VectorXd& a) {
    return CmiSetting{encode, bloch_pair(a(0), a(1)), initial_memory};
  };
  std::vector<Eigen::VectorXd> starts;
  for (auto k : top) starts.push_back(Eigen::Vector2d(grid[k].polar, grid[k].azimuth));
  return refine(search, std::move(starts), rng, options);
}

std::string to_string(MemoryPrep prep) {
  switch (prep) {
    case MemoryPrep::PlusX: return "plus_x";
    case MemoryPrep::PlusZ: return "plus_z";
    case MemoryPrep::Entangled: return "entangled";
  }
  return "unknown";
}

std::optional<MemoryPrep> parse_memory_prep(std::string_view text) {
  for (auto p : {MemoryPrep::PlusX, MemoryPrep::PlusZ, MemoryPrep::Entangled}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

MemoryPrep default_memory_prep(SensorFamily family) {
  return family == SensorFamily::CR ? MemoryPrep::PlusX : MemoryPrep::PlusZ;
}

Ket memory_state(MemoryPrep prep) {
  switch (prep) {
    case MemoryPrep::PlusX: return Ket({{labels::M, 2}}, basis::plus_x());
    case MemoryPrep::PlusZ: return Ket({{labels::M, 2}}, basis::plus_z());
    case MemoryPrep::Entangled: return Ket({{labels::M, 2}, {labels::MA, 2}}, basis::max_entangled(2));
  }
  throw ValidationError("unknown memory preparation");
}

DensityMatrix choi_state(const BipartiteUnitary& u, const DensityMatrix& memory) {
  std::vector<FactorLabel> targets{labels::S};
  int memory_dim = 1;
  for (const auto& f : memory.factors()) {
    if (f.label.role == Role::Memory) {
      targets.push_back(f.label);
      memory_dim *= f.dim;
    } else if (f.label.role != Role::MemoryAncilla) {
      throw LabelError("choi_state: memory preparation holds non-memory factor " + f.label.name());
    }
  }
  if (memory_dim != u.dim_m()) {
    throw ValidationError("choi_state: memory dimension does not match the sensor");
  }
  const DensityMatrix system_pair(Ket({{labels::S, u.dim_s()}, {labels::SA, u.dim_s()}},
                                      basis::max_entangled(u.dim_s())));
  return apply(u, tensor(memory, system_pair), targets);
}

DensityMatrix choi_state(const BipartiteUnitary& u, const Ket& memory) {
  return choi_state(u, DensityMatrix(memory));
}

InfoReport info_report(const DensityMatrix& post_state) {
  std::vector<FactorLabel> memory;
  int dim_m = 1;
  for (const auto& f : post_state.factors()) {
    if (f.label.role == Role::Memory || f.label.role == Role::MemoryAncilla) memory.push_back(f.label);
    if (f.label.role == Role::Memory) dim_m *= f.dim;
  }
  const int dim_s = post_state.factors()[index_of(post_state.factors(), labels::S)].dim;
  const std::array<FactorLabel, 1> system{labels::S};
  const std::array<FactorLabel, 1> ancilla{labels::SA};

  InfoReport report;
  report.acquired = mutual_information(post_state, memory, ancilla);
  report.residual = mutual_information(post_state, system, ancilla);
  report.conservation_defect = std::abs(report.acquired + report.residual - 2.0 * std::log2(dim_s));
  report.dim_s = dim_s;
  report.dim_m = dim_m;
  return report;
}

double acquired_information(const BipartiteUnitary& u, const Ket& memory) {
  return info_report(choi_state(u, memory)).acquired;
}

double residual_information(const BipartiteUnitary& u, const Ket& memory) {
  return info_report(choi_state(u, memory)).residual;
}

InfoReport conservation_report(const BipartiteUnitary& u, const Ket& memory) {
  return info_report(choi_state(u, memory));
}

}  // namespace qsense
