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

#ifndef QSENSE_INFO_HPP
#define QSENSE_INFO_HPP

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "qsense/sensors.hpp"
#include "qsense/state.hpp"

namespace qsense {

using BasisPair = std::array<Vector, 2>;

/// Orthonormal qubit pair with Bloch angles (polar, azimuth) for the first
/// vector; the second is its antipode.
BasisPair bloch_pair(double polar, double azimuth);

/// Eigenbasis of sigma_x (axis 1), sigma_y (2) or sigma_z (3), "+" first.
BasisPair pauli_eigenbasis(int axis);

/// Two-point classical channel: uniform prior over the encode pair on S,
/// projective decode pair on M, fixed initial memory.
struct CmiSetting {
  BasisPair encode;
  BasisPair decode;
  Vector initial_memory;

  void validate() const;
};

/// I(X;Y) = H(X) + H(Y) - H(X,Y) in bits for the sensor read out by `setting`.
double classical_mi(const BipartiteUnitary& u, const CmiSetting& setting);

struct CmiMaxOptions {
  double grid_step_degrees = 10.0;
  int refine_from_best = 5;
  int restarts = 3;
  double tolerance = 1e-9;
  bool optimize_memory = false;
};

struct CmiMaxResult {
  double bits = 0.0;
  CmiSetting setting;
  double restart_spread = 0.0;  // max - min over the seeded restarts
};

/// Maximizes classical_mi over encode and decode pairs (and optionally the
/// initial memory). Coarse Bloch-sphere grid, Nelder-Mead from the best grid
/// points, then seeded perturbation restarts until the gain is below
/// `tolerance`. Qubit-qubit sensors only.
CmiMaxResult classical_mi_max(const BipartiteUnitary& u, const Vector& initial_memory,
                              std::mt19937_64& rng, const CmiMaxOptions& options = {});

/// Same search with the encode pair held fixed; only the decode pair moves.
CmiMaxResult classical_mi_best_decode(const BipartiteUnitary& u, const BasisPair& encode,
                                      const Vector& initial_memory, std::mt19937_64& rng,
                                      const CmiMaxOptions& options = {});

enum class MemoryPrep { PlusX, PlusZ, Entangled };

std::string to_string(MemoryPrep prep);
std::optional<MemoryPrep> parse_memory_prep(std::string_view text);

/// Experimental preparation: |+x> for CR, |+z> otherwise.
MemoryPrep default_memory_prep(SensorFamily family);

/// Qubit memory state on M, or |Phi+> on (M, M_A) for Entangled.
Ket memory_state(MemoryPrep prep);

/// |Phi+>_{S,S_A} (x) memory, then U on (S, memory factors). Factor order of the
/// result: memory factors as given, then S, S_A. Memory-role factors (M, M1,
/// M2, ...) form the sensor's memory side; M_A factors are spectators.
DensityMatrix choi_state(const BipartiteUnitary& u, const Ket& memory);
DensityMatrix choi_state(const BipartiteUnitary& u, const DensityMatrix& memory);

struct InfoReport {
  double acquired = 0.0;
  double residual = 0.0;
  double conservation_defect = 0.0;
  int dim_s = 0;
  int dim_m = 0;
};

/// Acquired I(M..:S_A) and residual I(S:S_A) of a post-interaction state with
/// S, S_A and memory factors. All memory and memory-ancilla factors count as
/// the memory.
InfoReport info_report(const DensityMatrix& post_state);

double acquired_information(const BipartiteUnitary& u, const Ket& memory);
double residual_information(const BipartiteUnitary& u, const Ket& memory);
InfoReport conservation_report(const BipartiteUnitary& u, const Ket& memory);

}  // namespace qsense

#endif  // QSENSE_INFO_HPP
