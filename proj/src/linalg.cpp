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

#include "qsense/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsense {

namespace {

double diff_at_phase(const Matrix& a, const Matrix& b, double alpha) {
  const Complex phase = std::polar(1.0, alpha);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace

double phase_insensitive_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("phase_insensitive_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;

  // Coarse scan seeded with the least-squares phase, then golden-section
  // refinement around the best bracket.
  constexpr int kScan = 720;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const Complex overlap = (b.adjoint() * a).trace();
  double best_alpha = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  double best = diff_at_phase(a, b, best_alpha);
  for (int k = 0; k < kScan; ++k) {
    const double alpha = kTwoPi * k / kScan;
    const double d = diff_at_phase(a, b, alpha);
    if (d < best) {
      best = d;
      best_alpha = alpha;
    }
  }

  const double step = kTwoPi / kScan;
  double lo = best_alpha - step;
  double hi = best_alpha + step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = diff_at_phase(a, b, x1);
  double f2 = diff_at_phase(a, b, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = diff_at_phase(a, b, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = diff_at_phase(a, b, x2);
    }
  }
  return std::min({best, f1, f2});
}

EigenDecomposition eigh(const Matrix& m) {
  if (!is_hermitian(m)) {
    throw ValidationError("eigh: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigh: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SingularValueDecomposition svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
}

namespace pauli {

Matrix identity() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix by_index(int index) {
  switch (index) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw ValidationError("pauli::by_index: index out of range");
  }
}

}  // namespace pauli

}  // namespace qsense
