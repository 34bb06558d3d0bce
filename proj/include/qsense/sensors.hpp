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

#ifndef QSENSE_SENSORS_HPP
#define QSENSE_SENSORS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "qsense/linalg.hpp"
#include "qsense/state.hpp"

namespace qsense {

/// A sensor interaction on (S, M), system factor first. Unitary within 1e-10.
class BipartiteUnitary {
 public:
  BipartiteUnitary(int dim_s, int dim_m, Matrix matrix);

  int dim_s() const { return dim_s_; }
  int dim_m() const { return dim_m_; }
  int dim() const { return dim_s_ * dim_m_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  int dim_s_;
  int dim_m_;
  Matrix matrix_;
};

enum class SensorFamily { CR, SL, SWAP, CSWAP, CUSTOM };

std::string to_string(SensorFamily family);
std::optional<SensorFamily> parse_sensor_family(std::string_view text);

struct SensorSpec {
  SensorFamily family = SensorFamily::CR;
  double parameter = 0.0;  // phi for CR, theta for SL, unused otherwise
  std::optional<BipartiteUnitary> custom;
};

/// R_z(phi) = diag(e^{-i phi/2}, e^{i phi/2}).
Matrix rz(double phi);

/// |+x><+x| (x) R_z(phi) + |-x><-x| (x) R_z(-phi). Identity at phi = 0,
/// maximal at phi = pi/2.
BipartiteUnitary build_cr(double phi);

/// (1/2)[-(1+sin t) II - (1-sin t) ZZ + i cos t XY - i cos t YX]. -I at
/// theta = pi/2, SWAP-like at theta = 0.
BipartiteUnitary build_sl(double theta);

BipartiteUnitary build_swap(int d);

/// |0><0|_{M1} (x) SWAP_{M2,S} + |1><1|_{M1} (x) I, with dim_s = 2 and the
/// memory side ordered (M1, M2).
BipartiteUnitary build_cswap();

BipartiteUnitary build_sensor(const SensorSpec& spec);

/// Applies `u` to `targets` (system-side factors first, then memory-side),
/// identity on the rest.
Ket apply(const BipartiteUnitary& u, const Ket& state, std::span<const FactorLabel> targets);
DensityMatrix apply(const BipartiteUnitary& u, const DensityMatrix& state,
                    std::span<const FactorLabel> targets);

/// Plain-text matrix format: "dim_s dim_m" then (dim_s*dim_m)^2 lines of
/// "re im", row-major.
BipartiteUnitary read_custom_unitary(std::istream& in);
BipartiteUnitary load_custom_unitary(const std::string& path);
void write_custom_unitary(std::ostream& out, const BipartiteUnitary& u);

// Circuit forms of the two tunable sensors.

/// (H (x) I) [|0><0| (x) R_z(phi) + |1><1| (x) R_z(-phi)] (H (x) I).
Matrix cr_circuit(double phi);

/// -(cos t Z + sin t X).
Matrix half_wave_plate(double theta);

/// Matrix product SWAP * CNOT(S->M) * C_M[HWP(-theta)] * CNOT(S->M). The
/// plate enters with a negated angle; with HWP(+theta) no gate ordering
/// reproduces build_sl.
Matrix sl_circuit(double theta);

struct ControlledPhaseFit {
  int basis_index = -1;  // computational basis state carrying the phase
  double alpha = 0.0;    // radians
  double residual = 0.0; // phase-insensitive max-abs error
};

/// diag with e^{i alpha} on one basis state and 1 elsewhere.
Matrix controlled_phase(int dim, int basis_index, double alpha);

/// Best fit of `u` as controlled_phase(k, alpha) * SWAP, scanning every basis
/// state k and alpha over [0, 2 pi).
ControlledPhaseFit fit_swap_then_controlled_phase(const Matrix& u);

}  // namespace qsense

#endif  // QSENSE_SENSORS_HPP
