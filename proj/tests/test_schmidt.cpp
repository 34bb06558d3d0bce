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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qsense/info.hpp"
#include "qsense/random.hpp"
#include "qsense/schmidt.hpp"

using namespace qsense;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<BipartiteUnitary> named_sensors() {
  return {build_cr(0.0), build_cr(0.7), build_cr(kPi / 2), build_sl(0.0), build_sl(0.5),
          build_sl(kPi / 2), build_swap(2), build_cswap()};
}

Matrix expm_i_x(double angle) {
  return std::cos(angle) * pauli::identity() + kI * std::sin(angle) * pauli::x();
}

void check_structure(const BipartiteUnitary& u) {
  const auto d = schmidt_decompose(u);
  CHECK(max_abs_diff(reconstruct(d), u.matrix()) < 1e-9);
  CHECK(d.lambdas.squaredNorm() == doctest::Approx(1.0).epsilon(1e-9));
  const auto expected = oracle::schmidt_coefficients(u.matrix(), u.dim_s(), u.dim_m());
  for (Eigen::Index i = 0; i < d.lambdas.size(); ++i) {
    CHECK(std::abs(d.lambdas(i) - expected(i)) < 1e-9);
    if (i > 0) CHECK(d.lambdas(i) <= d.lambdas(i - 1) + 1e-15);
  }
  const double n = u.dim();
  for (std::size_t i = 0; i < d.sys_ops.size(); ++i) {
    for (std::size_t j = 0; j < d.sys_ops.size(); ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      CHECK(std::abs((d.sys_ops[i] * d.sys_ops[j].adjoint()).trace() / double(u.dim_s()) - delta) < 1e-9);
      CHECK(std::abs((d.mem_ops[i] * d.mem_ops[j].adjoint()).trace() / double(u.dim_m()) - delta) < 1e-9);
      const Matrix a = kron(d.sys_ops[i], d.mem_ops[i]);
      const Matrix b = kron(d.sys_ops[j], d.mem_ops[j]);
      CHECK(std::abs((a * b.adjoint()).trace() / n - delta) < 1e-9);
    }
  }
}

}  // namespace

TEST_CASE("decomposition structure on named sensors") {
  for (const auto& u : named_sensors()) check_structure(u);
}

TEST_CASE("decomposition structure on random unitaries") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) check_structure(BipartiteUnitary(2, 2, haar_unitary(4, rng)));
  // Non-power-of-two factors use the matrix-unit basis.
  for (int trial = 0; trial < 5; ++trial) check_structure(BipartiteUnitary(3, 2, haar_unitary(6, rng)));
  check_structure(BipartiteUnitary(2, 4, haar_unitary(8, rng)));
}

TEST_CASE("operator bases are orthonormal") {
  for (int d : {2, 3, 4, 8}) {
    const auto basis = operator_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d * d));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(std::abs((basis[i].adjoint() * basis[j]).trace() - Complex(i == j ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("controlled rotation has rank two with cosine and sine coefficients") {
  for (double phi = kPi / 40; phi <= kPi / 2 + 1e-12; phi += kPi / 40) {
    const auto d = schmidt_decompose(build_cr(phi));
    CHECK(schmidt_rank(d) == 2);
    CHECK(d.lambdas(0) == doctest::Approx(std::max(std::cos(phi / 2), std::sin(phi / 2))).epsilon(1e-9));
    CHECK(d.lambdas(1) == doctest::Approx(std::min(std::cos(phi / 2), std::sin(phi / 2))).epsilon(1e-9));
    const auto closed = cr_schmidt_terms(phi);
    CHECK(max_abs_diff(reconstruct(closed), build_cr(phi).matrix()) < 1e-12);
    // The second system operator is i sigma_x times the first, up to sign.
    CHECK(phase_insensitive_diff(closed.sys_ops[1], Matrix(kI * pauli::x() * closed.sys_ops[0])) < 1e-12);
  }
  CHECK(schmidt_rank(schmidt_decompose(build_cr(0.0))) == 1);
}

TEST_CASE("rotated-operator form of the controlled rotation") {
  // Terms cos(phi/2) e^{-i phi/2 X} (x) I + sin(phi/2) (i X e^{-i phi/2 X}) (x) Z.
  for (double phi : {0.3, 1.0, kPi / 2}) {
    const Matrix nu1 = expm_i_x(-phi / 2);
    const Matrix nu2 = kI * pauli::x() * nu1;
    const Matrix rotated = std::cos(phi / 2) * kron(nu1, pauli::identity()) + std::sin(phi / 2) * kron(nu2, pauli::z());

    Matrix phase_gate(2, 2);
    phase_gate << 1.0, 0.0, 0.0, std::exp(-kI * phi);
    Matrix phase_gate_inv(2, 2);
    phase_gate_inv << 1.0, 0.0, 0.0, std::exp(kI * phi);
    const Vector px = basis::plus_x();
    const Vector mx = basis::minus_x();
    const Matrix phase_gate_cr = kron(Matrix(px * px.adjoint()), phase_gate) + kron(Matrix(mx * mx.adjoint()), phase_gate_inv);
    CHECK(max_abs_diff(rotated, phase_gate_cr) < 1e-12);

    // Relative to build_cr it is a local change of frame, with identical coefficients.
    const Matrix framed = kron(nu1, pauli::x()) * build_cr(phi).matrix() * kron(pauli::identity(), pauli::x());
    CHECK(max_abs_diff(rotated, framed) < 1e-12);
    const auto d = schmidt_decompose(BipartiteUnitary(2, 2, rotated));
    CHECK(d.lambdas(0) == doctest::Approx(schmidt_decompose(build_cr(phi)).lambdas(0)));
  }
}

TEST_CASE("swap-like sensor has rank four until it becomes the identity") {
  for (double theta = 0.0; theta < kPi / 2 - 1e-9; theta += kPi / 40) {
    const auto d = schmidt_decompose(build_sl(theta));
    CHECK(schmidt_rank(d) == 4);
    std::vector<double> expected{(1 + std::sin(theta)) / 2, (1 - std::sin(theta)) / 2, std::cos(theta) / 2,
                                 std::cos(theta) / 2};
    std::sort(expected.rbegin(), expected.rend());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(d.lambdas(i) - expected[i]) < 1e-9);
  }
  CHECK(schmidt_rank(schmidt_decompose(build_sl(kPi / 2))) == 1);
}

TEST_CASE("strength values") {
  CHECK(schmidt_strength(schmidt_decompose(build_sl(0.0))) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(schmidt_strength(schmidt_decompose(build_cr(kPi / 2))) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(schmidt_strength(schmidt_decompose(build_cr(0.0))) == doctest::Approx(0.0));
  CHECK(schmidt_rank(schmidt_decompose(build_swap(2))) == 4);
  CHECK(schmidt_rank(schmidt_decompose(build_cswap())) == 4);
}

TEST_CASE("strength is invariant under local unitaries") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix u = haar_unitary(4, rng);
    const Matrix before = kron(haar_unitary(2, rng), haar_unitary(2, rng));
    const Matrix after = kron(haar_unitary(2, rng), haar_unitary(2, rng));
    const double s0 = schmidt_strength(schmidt_decompose(BipartiteUnitary(2, 2, u)));
    const double s1 = schmidt_strength(schmidt_decompose(BipartiteUnitary(2, 2, after * u * before)));
    CHECK(std::abs(s0 - s1) < 1e-9);
  }
}

TEST_CASE("qubit sensors: entangled-memory acquired information equals strength") {
  CHECK(max_acquired_equals_strength_check(build_cr(kPi / 3)).difference < 1e-6);
  CHECK(max_acquired_equals_strength_check(build_sl(kPi / 5)).difference < 1e-6);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteUnitary u(2, 2, haar_unitary(4, rng));
    const auto c = max_acquired_equals_strength_check(u);
    CHECK(c.difference < 1e-6);
    CHECK(c.strength == doctest::Approx(oracle::schmidt_strength(u.matrix(), 2, 2)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(max_acquired_equals_strength_check(build_cswap()), ValidationError);
}

TEST_CASE("controlled swap breaks the equality") {
  const auto c = cswap_counterexample();
  CHECK(c.acquired == doctest::Approx(2.0).epsilon(1e-9));
  const double oracle_strength = oracle::schmidt_strength(build_cswap().matrix(), 2, 4);
  CHECK(c.strength == doctest::Approx(oracle_strength).epsilon(1e-9));
  CHECK(oracle_strength == doctest::Approx(-0.625 * std::log2(0.625) - 0.375 * std::log2(0.125)).epsilon(1e-9));
  CHECK(c.acquired - c.strength > 0.1);
  CHECK(std::abs(CswapCounterexample::kReportedStrength - c.strength) > 0.3);
  // Independent evaluation of the acquired information.
  Vector memory = Vector::Zero(8);
  memory(0) = memory(3) = 1.0 / std::sqrt(2.0);  // |0>_{M1} (x) |Phi+>_{M2, M_A}
  CHECK(oracle::information(build_cswap().matrix(), 2, 4, memory).acquired == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("implementable operators") {
  const auto cr = schmidt_decompose(build_cr(0.8));
  const auto first = implementable_operator(cr, Vector::Unit(2, 0));
  CHECK(max_abs_diff(first.op, Matrix(cr.lambdas(0) * cr.sys_ops[0])) < 1e-12);
  CHECK(first.herald_probability == doctest::Approx(cr.lambdas(0) * cr.lambdas(0)));
  CHECK_THROWS_AS(implementable_operator(cr, Vector::Ones(3)), ValidationError);

  // Controlled rotation: everything lies in span{I, sigma_x}.
  std::mt19937_64 rng(34);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    Vector c(2);
    c << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    const Matrix n = implementable_operator(cr, c).op;
    CHECK(std::abs(n(0, 0) - n(1, 1)) < 1e-12);
    CHECK(std::abs(n(0, 1) - n(1, 0)) < 1e-12);
  }

  // Swap-like sensor at theta = 0: brute-force projection of the tripartite state.
  const auto u = build_sl(0.0);
  const auto d = schmidt_decompose(u);
  const Vector phi_plus = basis::max_entangled(2);
  for (int trial = 0; trial < 5; ++trial) {
    Vector c(4);
    for (auto& x : c) x = Complex(g(rng), g(rng));
    Vector chi = Vector::Zero(4);
    for (int i = 0; i < 4; ++i) chi += std::conj(c(i)) * kron(d.mem_ops[i], pauli::identity()) * phi_plus;
    Matrix brute = Matrix::Zero(2, 2);
    for (int s_in = 0; s_in < 2; ++s_in) {
      const Vector in = kron(Vector(Vector::Unit(2, s_in)), phi_plus);  // (S, M, M_A)
      const Vector out = kron(u.matrix(), pauli::identity()) * in;
      for (int s_out = 0; s_out < 2; ++s_out) brute(s_out, s_in) = chi.dot(out.segment(4 * s_out, 4));
    }
    const auto op = implementable_operator(d, c);
    CHECK(max_abs_diff(op.op, brute) < 1e-9);
    CHECK(op.herald_probability == doctest::Approx((brute * brute.adjoint()).trace().real() / (2 * c.squaredNorm())));
  }
}
