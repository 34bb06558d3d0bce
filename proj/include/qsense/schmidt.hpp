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

#ifndef QSENSE_SCHMIDT_HPP
#define QSENSE_SCHMIDT_HPP

#include <vector>

#include "qsense/sensors.hpp"

namespace qsense {

/// U = sum_i lambda_i nu_i (x) mu_i with Tr[nu_i nu_j^dagger]/d_s = delta_ij,
/// Tr[mu_i mu_j^dagger]/d_m = delta_ij, lambdas real, descending and
/// sum_i lambda_i^2 = 1. Holds all min(d_s^2, d_m^2) terms, zeros included.
struct SchmidtDecomposition {
  RealVector lambdas;
  std::vector<Matrix> sys_ops;
  std::vector<Matrix> mem_ops;
  double rank_tolerance = 1e-10;  // relative to the largest lambda
  int dim_s = 0;
  int dim_m = 0;
};

/// Hilbert-Schmidt orthonormal operator basis on C^d: normalized Pauli strings
/// when d is a power of two, matrix units otherwise.
std::vector<Matrix> operator_basis(int d);

/// Expands U over operator_basis(d_s) (x) operator_basis(d_m) and takes the
/// SVD of the coefficient matrix. Phases sit in the system operators.
SchmidtDecomposition schmidt_decompose(const BipartiteUnitary& u);

/// Closed-form decomposition of build_cr(phi): lambdas (cos phi/2, sin phi/2),
/// nu = (I, -i sigma_x), mu = (I, sigma_z).
SchmidtDecomposition cr_schmidt_terms(double phi);

Matrix reconstruct(const SchmidtDecomposition& d);

int schmidt_rank(const SchmidtDecomposition& d);

/// Shannon entropy of p_i = lambda_i^2, in bits.
double schmidt_strength(const SchmidtDecomposition& d);

struct StrengthCheck {
  double strength = 0.0;
  double acquired = 0.0;  // memory (M, M_A) prepared in |Phi+>
  double difference = 0.0;
};

/// For qubit-qubit sensors the acquired information with a maximally
/// entangled memory equals the Schmidt strength.
StrengthCheck max_acquired_equals_strength_check(const BipartiteUnitary& u);

struct CswapCounterexample {
  double strength = 0.0;
  double acquired = 0.0;  // M1 = |0>, M2 maximally entangled with M_A
  // Value quoted in the literature for this unitary; the decomposition here
  // gives p = (5/8, 1/8, 1/8, 1/8), about 1.549 bits.
  static constexpr double kReportedStrength = 1.86;
};

CswapCounterexample cswap_counterexample();

struct ImplementableOperator {
  Matrix op;                        // sum_i c_i lambda_i nu_i, unnormalized
  double herald_probability = 0.0;  // Tr(N N^dagger) / (d_s |c|^2)
};

/// System operator heralded by projecting (M, M_A), prepared in |Phi+>, onto
/// sum_i conj(c_i) (mu_i (x) I)|Phi+>. `coeffs` has one entry per nonzero
/// Schmidt term.
ImplementableOperator implementable_operator(const SchmidtDecomposition& d, const Vector& coeffs);

}  // namespace qsense

#endif  // QSENSE_SCHMIDT_HPP
