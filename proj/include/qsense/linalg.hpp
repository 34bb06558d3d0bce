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

#ifndef QSENSE_LINALG_HPP
#define QSENSE_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Tolerances shared across modules.
inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kEigenClamp = 1e-12;

/// Thrown when an input violates a documented precondition (shape, unitarity,
/// hermiticity, normalization).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a tensor-factor label is unknown or duplicated.
class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename A, typename B>
Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Result = Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename A>
bool is_hermitian(const Eigen::MatrixBase<A>& m, double tol = kStateTolerance) {
  return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

template <typename A>
bool is_unitary(const Eigen::MatrixBase<A>& m, double tol = kStateTolerance) {
  if (m.rows() != m.cols()) return false;
  const Matrix product = m.adjoint() * m;
  return max_abs_diff(product, Matrix::Identity(m.rows(), m.cols())) <= tol;
}

/// Max-abs difference between `a` and `b` minimized over a global phase
/// e^{i alpha} multiplying `b`.
double phase_insensitive_diff(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
  RealVector values;  // ascending
  Matrix vectors;     // columns are eigenvectors
};

/// Hermitian eigendecomposition. Throws ValidationError if `m` is not
/// Hermitian within kStateTolerance.
EigenDecomposition eigh(const Matrix& m);

struct SingularValueDecomposition {
  Matrix u;
  RealVector values;  // descending
  Matrix v_adjoint;
};

SingularValueDecomposition svd(const Matrix& m);

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
/// Pauli by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
Matrix by_index(int index);
}  // namespace pauli

}  // namespace qsense

#endif  // QSENSE_LINALG_HPP
