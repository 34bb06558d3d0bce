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

#ifndef QSENSE_RANDOM_HPP
#define QSENSE_RANDOM_HPP

#include <random>

#include "qsense/linalg.hpp"
#include "qsense/state.hpp"

namespace qsense {

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal divided out.
template <typename Rng>
Matrix haar_unitary(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

/// Uniformly random pure state on `factors`.
template <typename Rng>
Ket random_ket(FactorList factors, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(total_dim(factors));
  for (auto& a : v) a = Complex(normal(rng), normal(rng));
  v.normalize();
  return Ket(std::move(factors), std::move(v));
}

}  // namespace qsense

#endif  // QSENSE_RANDOM_HPP
