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

#include "qsense/sensors.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qsense {

namespace {

Matrix projector(const Vector& v) { return v * v.adjoint(); }

void check_targets(const BipartiteUnitary& u, std::span<const Factor> factors,
                   std::span<const FactorLabel> targets) {
  int product = 1;
  bool split_found = false;
  for (const auto& label : targets) {
    product *= factors[index_of(factors, label)].dim;
    if (product == u.dim_s()) split_found = true;
  }
  if (product != u.dim() || !split_found) {
    throw ValidationError("apply: target dimensions do not match the unitary");
  }
}

}  // namespace

BipartiteUnitary::BipartiteUnitary(int dim_s, int dim_m, Matrix matrix)
    : dim_s_(dim_s), dim_m_(dim_m), matrix_(std::move(matrix)) {
  if (dim_s < 1 || dim_m < 1) throw ValidationError("BipartiteUnitary: dimensions must be positive");
  if (matrix_.rows() != dim() || matrix_.cols() != dim()) {
    throw ValidationError("BipartiteUnitary: matrix size does not match dim_s * dim_m");
  }
  if (!matrix_.allFinite()) throw ValidationError("BipartiteUnitary: non-finite entry");
  if (!is_unitary(matrix_)) throw ValidationError("BipartiteUnitary: matrix is not unitary");
}

std::string to_string(SensorFamily family) {
  switch (family) {
    case SensorFamily::CR: return "cr";
    case SensorFamily::SL: return "sl";
    case SensorFamily::SWAP: return "swap";
    case SensorFamily::CSWAP: return "cswap";
    case SensorFamily::CUSTOM: return "custom";
  }
  return "unknown";
}

std::optional<SensorFamily> parse_sensor_family(std::string_view text) {
  for (auto f : {SensorFamily::CR, SensorFamily::SL, SensorFamily::SWAP, SensorFamily::CSWAP,
                 SensorFamily::CUSTOM}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

Matrix rz(double phi) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -phi / 2.0);
  m(1, 1) = std::polar(1.0, phi / 2.0);
  return m;
}

BipartiteUnitary build_cr(double phi) {
  if (!std::isfinite(phi)) throw ValidationError("build_cr: phi must be finite");
  Matrix u = kron(projector(basis::plus_x()), rz(phi)) + kron(projector(basis::minus_x()), rz(-phi));
  return BipartiteUnitary(2, 2, std::move(u));
}

BipartiteUnitary build_sl(double theta) {
  if (!std::isfinite(theta)) throw ValidationError("build_sl: theta must be finite");
  using namespace pauli;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  Matrix u = 0.5 * (-(1.0 + s) * kron(identity(), identity()) - (1.0 - s) * kron(z(), z()) +
                    kI * c * kron(x(), y()) - kI * c * kron(y(), x()));
  return BipartiteUnitary(2, 2, std::move(u));
}

BipartiteUnitary build_swap(int d) {
  if (d < 2) throw ValidationError("build_swap: d must be at least 2");
  Matrix u = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) u(b * d + a, a * d + b) = 1.0;
  }
  return BipartiteUnitary(d, d, std::move(u));
}

BipartiteUnitary build_cswap() {
  // Built in (M1, M2, S) order, then reordered to (S, M1, M2).
  const Matrix p0 = projector(basis::plus_z());
  const Matrix p1 = projector(basis::minus_z());
  const Matrix in_m1_first =
      kron(p0, build_swap(2).matrix()) + kron(p1, Matrix::Identity(4, 4).eval());
  const FactorList order{{labels::S, 2}, {labels::M1, 2}, {labels::M2, 2}};
  const std::array<FactorLabel, 3> targets{labels::M1, labels::M2, labels::S};
  return BipartiteUnitary(2, 4, lift(in_m1_first, order, targets));
}

BipartiteUnitary build_sensor(const SensorSpec& spec) {
  switch (spec.family) {
    case SensorFamily::CR: return build_cr(spec.parameter);
    case SensorFamily::SL: return build_sl(spec.parameter);
    case SensorFamily::SWAP: return build_swap(2);
    case SensorFamily::CSWAP: return build_cswap();
    case SensorFamily::CUSTOM:
      if (!spec.custom) throw ValidationError("custom sensor requires a matrix");
      return *spec.custom;
  }
  throw ValidationError("unknown sensor family");
}

Ket apply(const BipartiteUnitary& u, const Ket& state, std::span<const FactorLabel> targets) {
  check_targets(u, state.factors(), targets);
  const Matrix full = lift(u.matrix(), state.factors(), targets);
  Vector out = full * state.amplitudes();
  out.normalize();
  return Ket(state.factors(), std::move(out));
}

DensityMatrix apply(const BipartiteUnitary& u, const DensityMatrix& state,
                    std::span<const FactorLabel> targets) {
  check_targets(u, state.factors(), targets);
  const Matrix full = lift(u.matrix(), state.factors(), targets);
  Matrix out = full * state.matrix() * full.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(state.factors(), std::move(out));
}

BipartiteUnitary read_custom_unitary(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw ValidationError("custom matrix: unexpected end of file after line " +
                          std::to_string(line_no));
  };

  int dim_s = 0;
  int dim_m = 0;
  {
    auto header = next_line();
    if (!(header >> dim_s >> dim_m) || dim_s < 1 || dim_m < 1) {
      throw ValidationError("custom matrix: line " + std::to_string(line_no) +
                            ": expected \"dim_s dim_m\"");
    }
  }
  const int n = dim_s * dim_m;
  if (n > 64) throw ValidationError("custom matrix: total dimension exceeds 64");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      auto row = next_line();
      double re = 0.0;
      double im = 0.0;
      if (!(row >> re >> im)) {
        throw ValidationError("custom matrix: line " + std::to_string(line_no) +
                              ": expected \"re im\"");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return BipartiteUnitary(dim_s, dim_m, std::move(m));
}

BipartiteUnitary load_custom_unitary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("custom matrix: cannot open " + path);
  return read_custom_unitary(in);
}

void write_custom_unitary(std::ostream& out, const BipartiteUnitary& u) {
  const auto old_precision = out.precision(17);
  out << u.dim_s() << ' ' << u.dim_m() << '\n';
  for (int r = 0; r < u.dim(); ++r) {
    for (int c = 0; c < u.dim(); ++c) {
      out << u.matrix()(r, c).real() << ' ' << u.matrix()(r, c).imag() << '\n';
    }
  }
  out.precision(old_precision);
}

Matrix cr_circuit(double phi) {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix hadamard_s = kron(h, id);
  const Matrix controlled = kron(projector(basis::plus_z()), rz(phi)) +
                            kron(projector(basis::minus_z()), rz(-phi));
  return hadamard_s * controlled * hadamard_s;
}

Matrix half_wave_plate(double theta) {
  return -(std::cos(theta) * pauli::z() + std::sin(theta) * pauli::x());
}

Matrix sl_circuit(double theta) {
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix p0 = projector(basis::plus_z());
  const Matrix p1 = projector(basis::minus_z());
  const Matrix cnot = kron(p0, id) + kron(p1, pauli::x());
  const Matrix plate = kron(id, p0) + kron(half_wave_plate(-theta), p1);
  return build_swap(2).matrix() * cnot * plate * cnot;
}

Matrix controlled_phase(int dim, int basis_index, double alpha) {
  Matrix d = Matrix::Identity(dim, dim);
  d(basis_index, basis_index) = std::polar(1.0, alpha);
  return d;
}

ControlledPhaseFit fit_swap_then_controlled_phase(const Matrix& u) {
  const int dim = static_cast<int>(u.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(dim)));
  if (d * d != dim) throw ValidationError("fit_swap_then_controlled_phase: not a d x d operator");
  const Matrix swap = build_swap(d).matrix();

  constexpr int kSteps = 720;
  ControlledPhaseFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < dim; ++k) {
    for (int step = 0; step < kSteps; ++step) {
      const double alpha = 2.0 * std::numbers::pi * step / kSteps;
      const double r = phase_insensitive_diff(u, controlled_phase(dim, k, alpha) * swap);
      if (r < best.residual) best = {k, alpha, r};
    }
  }
  return best;
}

}  // namespace qsense
