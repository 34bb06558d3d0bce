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

#include "qsense/schmidt.hpp"

#include <cmath>

#include "qsense/info.hpp"

namespace qsense {

namespace {

bool is_power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

}  // namespace

std::vector<Matrix> operator_basis(int d) {
  std::vector<Matrix> basis;
  if (is_power_of_two(d)) {
    basis.push_back(Matrix::Identity(1, 1));
    for (int width = 1; width < d; width *= 2) {
      std::vector<Matrix> next;
      for (const auto& b : basis) {
        for (int p = 0; p < 4; ++p) next.push_back(kron(b, pauli::by_index(p)));
      }
      basis = std::move(next);
    }
    for (auto& b : basis) b /= std::sqrt(static_cast<double>(d));
    return basis;
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix unit = Matrix::Zero(d, d);
      unit(i, j) = 1.0;
      basis.push_back(std::move(unit));
    }
  }
  return basis;
}

SchmidtDecomposition schmidt_decompose(const BipartiteUnitary& u) {
  const auto sys_basis = operator_basis(u.dim_s());
  const auto mem_basis = operator_basis(u.dim_m());

  Matrix coefficients(sys_basis.size(), mem_basis.size());
  for (std::size_t a = 0; a < sys_basis.size(); ++a) {
    for (std::size_t b = 0; b < mem_basis.size(); ++b) {
      coefficients(a, b) = kron(sys_basis[a], mem_basis[b]).conjugate().cwiseProduct(u.matrix()).sum();
    }
  }
  const auto decomposition = svd(coefficients);

  SchmidtDecomposition out;
  out.dim_s = u.dim_s();
  out.dim_m = u.dim_m();
  const Eigen::Index terms = decomposition.values.size();
  out.lambdas = decomposition.values / std::sqrt(static_cast<double>(u.dim()));
  const Matrix v = decomposition.v_adjoint.adjoint();
  for (Eigen::Index n = 0; n < terms; ++n) {
    Matrix nu = Matrix::Zero(u.dim_s(), u.dim_s());
    Matrix mu = Matrix::Zero(u.dim_m(), u.dim_m());
    for (std::size_t a = 0; a < sys_basis.size(); ++a) nu += decomposition.u(a, n) * sys_basis[a];
    for (std::size_t b = 0; b < mem_basis.size(); ++b) mu += std::conj(v(b, n)) * mem_basis[b];
    out.sys_ops.push_back(nu * std::sqrt(static_cast<double>(u.dim_s())));
    out.mem_ops.push_back(mu * std::sqrt(static_cast<double>(u.dim_m())));
  }
  return out;
}

SchmidtDecomposition cr_schmidt_terms(double phi) {
  SchmidtDecomposition out;
  out.dim_s = 2;
  out.dim_m = 2;
  out.lambdas = Eigen::Vector2d(std::abs(std::cos(phi / 2.0)), std::abs(std::sin(phi / 2.0)));
  // Signs of cos/sin go into the system operators.
  const double c_sign = std::cos(phi / 2.0) < 0.0 ? -1.0 : 1.0;
  const double s_sign = std::sin(phi / 2.0) < 0.0 ? -1.0 : 1.0;
  out.sys_ops = {c_sign * pauli::identity(), Matrix(-kI * s_sign * pauli::x())};
  out.mem_ops = {pauli::identity(), pauli::z()};
  return out;
}

Matrix reconstruct(const SchmidtDecomposition& d) {
  Matrix u = Matrix::Zero(d.dim_s * d.dim_m, d.dim_s * d.dim_m);
  for (Eigen::Index i = 0; i < d.lambdas.size(); ++i) u += d.lambdas(i) * kron(d.sys_ops[i], d.mem_ops[i]);
  return u;
}

int schmidt_rank(const SchmidtDecomposition& d) {
  if (d.lambdas.size() == 0) return 0;
  const double threshold = d.rank_tolerance * d.lambdas.maxCoeff();
  int rank = 0;
  for (double l : d.lambdas) {
    if (l > threshold) ++rank;
  }
  return rank;
}

double schmidt_strength(const SchmidtDecomposition& d) {
  std::vector<double> p(d.lambdas.size());
  for (Eigen::Index i = 0; i < d.lambdas.size(); ++i) p[i] = d.lambdas(i) * d.lambdas(i);
  return shannon_entropy(p);
}

StrengthCheck max_acquired_equals_strength_check(const BipartiteUnitary& u) {
  if (u.dim_s() != 2 || u.dim_m() != 2) {
    throw ValidationError("max_acquired_equals_strength_check: qubit-qubit sensors only");
  }
  StrengthCheck check;
  check.strength = schmidt_strength(schmidt_decompose(u));
  check.acquired = acquired_information(u, memory_state(MemoryPrep::Entangled));
  check.difference = std::abs(check.acquired - check.strength);
  return check;
}

CswapCounterexample cswap_counterexample() {
  const auto u = build_cswap();
  const Ket m1({{labels::M1, 2}}, basis::plus_z());
  const Ket m2_pair({{labels::M2, 2}, {labels::MA, 2}}, basis::max_entangled(2));
  CswapCounterexample out;
  out.strength = schmidt_strength(schmidt_decompose(u));
  out.acquired = acquired_information(u, tensor(m1, m2_pair));
  return out;
}

ImplementableOperator implementable_operator(const SchmidtDecomposition& d, const Vector& coeffs) {
  const int rank = schmidt_rank(d);
  if (coeffs.size() != rank) {
    throw ValidationError("implementable_operator: need one coefficient per Schmidt term");
  }
  ImplementableOperator out;
  out.op = Matrix::Zero(d.dim_s, d.dim_s);
  for (int i = 0; i < rank; ++i) out.op += coeffs(i) * d.lambdas(i) * d.sys_ops[i];
  const double norm2 = coeffs.squaredNorm();
  out.herald_probability =
      norm2 > 0.0 ? (out.op * out.op.adjoint()).trace().real() / (d.dim_s * norm2) : 0.0;
  return out;
}

}  // namespace qsense
