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

#ifndef QSENSE_ERASURE_HPP
#define QSENSE_ERASURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "qsense/sensors.hpp"
#include "qsense/state.hpp"

namespace qsense {

struct NoiseModel {
  double phase_jitter_sigma = 0.0;  // radians, Gaussian std of the system-path phase
  double bell_visibility = 1.0;     // in [0, 1]

  void validate() const;

  static NoiseModel ideal() { return {}; }
  static NoiseModel cr_experiment() { return {0.3, 1.0}; }
  static NoiseModel sl_experiment() { return {0.08, 0.78}; }
};

/// Heralded measurement on the memory side (M, or M (x) M_A) with one
/// correction unitary on S per outcome.
struct ErasureProtocol {
  std::string name;
  std::vector<Matrix> effects;
  std::vector<Matrix> corrections;
  int channel_bits = 0;
  bool two_photon = false;  // effects are Bell projections, subject to visibility

  /// Effects Hermitian, positive and summing to identity; corrections unitary;
  /// counts equal. Tolerance 1e-10.
  void validate() const;
};

struct ErasureResult {
  double post_restoration_info = 0.0;
  std::vector<double> outcome_probs;
  double outcome_entropy = 0.0;
  int channel_bits = 0;
};

/// |+-x> on M, corrections (I, i sigma_x): the adjoints of the closed-form
/// system operators of build_cr.
ErasureProtocol protocol_cr(double phi);

/// Bell projections on (M, M_A) in the order Phi+, Phi-, Psi-, Psi+, heralding
/// the Schmidt terms of build_sl; corrections (I, Z, X, Y).
ErasureProtocol protocol_sl_2bit(double theta);

/// Parity measurement on (M, M_A): correlated |00>,|11> and anti-correlated
/// |01>,|10>. Corrections are the Pauli pair maximizing the ideal-noise
/// post-restoration information at `theta`, ties going to (Z, X).
ErasureProtocol protocol_sl_1bit(double theta);

/// Bell projections on (M, M_A) for any qubit-qubit sensor. Each outcome's
/// heralded system operator <B_k|U|Phi+> is inverted when it is proportional
/// to a unitary; unreachable outcomes get the identity. Throws when some
/// reachable outcome heralds a non-unitary operator.
ErasureProtocol protocol_bell_heralded(const BipartiteUnitary& u);

/// Single outcome, no correction, zero channel bits.
ErasureProtocol protocol_trivial(int memory_dim, int system_dim);

/// Off-diagonals of `target` in the computational basis damped by
/// exp(-sigma^2 / 2).
DensityMatrix dephase(const DensityMatrix& state, double sigma, const FactorLabel& target = labels::S);

/// V B + (1 - V) diag(B).
Matrix degrade_projector(const Matrix& projector, double visibility);

/// Phase jitter on S.
DensityMatrix apply_noise(const DensityMatrix& state, const NoiseModel& noise);

/// Visibility on the effects of two-photon protocols; others pass through.
ErasureProtocol apply_noise(const ErasureProtocol& protocol, const NoiseModel& noise);

/// Choi state, noise, heralded corrections, then I(S:S_A) of the mixture over
/// outcomes.
ErasureResult run_erasure(const BipartiteUnitary& u, const ErasureProtocol& protocol,
                          const NoiseModel& noise, const Ket& memory);

/// log2 of the operator-Schmidt rank.
double required_channel_bits(const BipartiteUnitary& u);

/// Outcome entropy of ideal 2-bit erasure of build_sl(theta).
std::vector<std::pair<double, double>> erasure_bit_entropy_curve(const std::vector<double>& thetas);

}  // namespace qsense

#endif  // QSENSE_ERASURE_HPP
