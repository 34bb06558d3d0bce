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

#include "qsense/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

namespace qsense {

namespace {

constexpr double kKetNormTolerance = 1e-12;

void check_unique(std::span<const Factor> factors) {
  std::set<FactorLabel> seen;
  for (const auto& f : factors) {
    if (f.dim < 1) throw ValidationError("factor " + f.label.name() + " has non-positive dimension");
    if (!seen.insert(f.label).second) {
      throw LabelError("duplicate factor label " + f.label.name());
    }
  }
}

// Digits of a flat index in the mixed radix given by `factors`.
std::vector<int> digits_of(int index, std::span<const Factor> factors) {
  std::vector<int> digits(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    digits[k] = index % factors[k].dim;
    index /= factors[k].dim;
  }
  return digits;
}

// For every flat index, the composite index over `selected` positions (in the
// order given) and over the remaining positions (in original order).
struct Split {
  std::vector<int> selected;
  std::vector<int> rest;
};

Split split_indices(std::span<const Factor> factors, std::span<const std::size_t> positions) {
  const int dim = total_dim(factors);
  std::vector<bool> is_selected(factors.size(), false);
  for (auto p : positions) is_selected[p] = true;

  Split split{std::vector<int>(dim), std::vector<int>(dim)};
  for (int i = 0; i < dim; ++i) {
    const auto digits = digits_of(i, factors);
    int sel = 0;
    for (auto p : positions) sel = sel * factors[p].dim + digits[p];
    int rest = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (!is_selected[k]) rest = rest * factors[k].dim + digits[k];
    }
    split.selected[i] = sel;
    split.rest[i] = rest;
  }
  return split;
}

std::vector<std::size_t> positions_of(std::span<const Factor> factors,
                                      std::span<const FactorLabel> labels) {
  std::vector<std::size_t> positions;
  positions.reserve(labels.size());
  for (const auto& l : labels) {
    const auto p = index_of(factors, l);
    if (std::find(positions.begin(), positions.end(), p) != positions.end()) {
      throw LabelError("label listed twice: " + l.name());
    }
    positions.push_back(p);
  }
  return positions;
}

}  // namespace

std::string FactorLabel::name() const {
  std::string base;
  switch (role) {
    case Role::System: base = "S"; break;
    case Role::Memory: base = "M"; break;
    case Role::SystemAncilla: base = "S_A"; break;
    case Role::MemoryAncilla: base = "M_A"; break;
  }
  if (index > 0) base += std::to_string(index);
  return base;
}

FactorLabel FactorLabel::parse(std::string_view text) {
  auto split_index = [&](std::string_view prefix, Role role) -> std::optional<FactorLabel> {
    if (!text.starts_with(prefix)) return std::nullopt;
    const auto tail = text.substr(prefix.size());
    if (tail.empty()) return FactorLabel{role, 0};
    if (!std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    return FactorLabel{role, std::stoi(std::string(tail))};
  };
  for (auto [prefix, role] : {std::pair{std::string_view("S_A"), Role::SystemAncilla},
                              std::pair{std::string_view("M_A"), Role::MemoryAncilla},
                              std::pair{std::string_view("S"), Role::System},
                              std::pair{std::string_view("M"), Role::Memory}}) {
    if (auto label = split_index(prefix, role)) return *label;
  }
  throw LabelError("unknown factor label '" + std::string(text) + "'");
}

int total_dim(std::span<const Factor> factors) {
  int d = 1;
  for (const auto& f : factors) d *= f.dim;
  return d;
}

std::size_t index_of(std::span<const Factor> factors, const FactorLabel& label) {
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].label == label) return k;
  }
  throw LabelError("unknown factor label " + label.name());
}

Ket::Ket(FactorList factors, Vector amplitudes)
    : factors_(std::move(factors)), amplitudes_(std::move(amplitudes)) {
  check_unique(factors_);
  if (total_dim(factors_) != amplitudes_.size()) {
    throw ValidationError("Ket: product of factor dimensions does not match amplitude count");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kKetNormTolerance) {
    throw ValidationError("Ket: amplitudes are not normalized");
  }
}

DensityMatrix::DensityMatrix(FactorList factors, Matrix matrix)
    : factors_(std::move(factors)), matrix_(std::move(matrix)) {
  check_unique(factors_);
  if (matrix_.rows() != matrix_.cols() || total_dim(factors_) != matrix_.rows()) {
    throw ValidationError("DensityMatrix: shape does not match factor dimensions");
  }
  if (!is_hermitian(matrix_)) throw ValidationError("DensityMatrix: not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0)) > kStateTolerance) {
    throw ValidationError("DensityMatrix: trace is not 1");
  }
  const auto spectrum = eigh(matrix_);
  if (spectrum.values.minCoeff() < -kStateTolerance) {
    throw ValidationError("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix::DensityMatrix(const Ket& ket)
    : DensityMatrix(ket.factors(), ket.amplitudes() * ket.amplitudes().adjoint()) {}

Ket tensor(const Ket& a, const Ket& b) {
  FactorList factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return Ket(std::move(factors), kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  FactorList factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return DensityMatrix(std::move(factors), kron(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& op, std::span<const Factor> factors,
                     std::span<const FactorLabel> keep) {
  if (keep.empty()) throw LabelError("partial_trace: keep set is empty");
  auto positions = positions_of(factors, keep);
  std::sort(positions.begin(), positions.end());

  int kept_dim = 1;
  for (auto p : positions) kept_dim *= factors[p].dim;
  const auto split = split_indices(factors, positions);
  const int dim = total_dim(factors);

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (split.rest[i] == split.rest[j]) out(split.selected[i], split.selected[j]) += op(i, j);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const FactorLabel> keep) {
  Matrix reduced = partial_trace(rho.matrix(), rho.factors(), keep);
  FactorList kept;
  for (const auto& f : rho.factors()) {
    if (std::find(keep.begin(), keep.end(), f.label) != keep.end()) kept.push_back(f);
  }
  // Hermitize away accumulated rounding before validation.
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  return DensityMatrix(std::move(kept), std::move(reduced));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<FactorLabel> keep) {
  return partial_trace(rho, std::span<const FactorLabel>(keep.begin(), keep.size()));
}

Matrix lift(const Matrix& op, std::span<const Factor> factors,
            std::span<const FactorLabel> targets) {
  const auto positions = positions_of(factors, targets);
  int target_dim = 1;
  for (auto p : positions) target_dim *= factors[p].dim;
  if (op.rows() != target_dim || op.cols() != target_dim) {
    throw ValidationError("lift: operator dimension does not match target factors");
  }
  const auto split = split_indices(factors, positions);
  const int dim = total_dim(factors);
  Matrix full = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (split.rest[i] == split.rest[j]) full(i, j) = op(split.selected[i], split.selected[j]);
    }
  }
  return full;
}

double von_neumann_entropy(const Matrix& hermitian) {
  const auto spectrum = eigh(hermitian);
  double h = 0.0;
  for (double lambda : spectrum.values) {
    if (lambda > kEigenClamp) h -= lambda * std::log2(lambda);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    if (v < -kEigenClamp) throw ValidationError("shannon_entropy: negative probability");
    total += std::max(v, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("shannon_entropy: probabilities do not sum to 1");
  }
  double h = 0.0;
  for (double v : p) {
    const double q = std::max(v, 0.0) / total;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

double mutual_information(const DensityMatrix& rho, std::span<const FactorLabel> a,
                          std::span<const FactorLabel> b) {
  std::vector<FactorLabel> joint(a.begin(), a.end());
  joint.insert(joint.end(), b.begin(), b.end());
  return von_neumann_entropy(partial_trace(rho, a)) + von_neumann_entropy(partial_trace(rho, b)) -
         von_neumann_entropy(partial_trace(rho, joint));
}

namespace basis {

namespace {
Vector qubit(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

Vector plus_z() { return qubit(1.0, 0.0); }
Vector minus_z() { return qubit(0.0, 1.0); }
Vector plus_x() { return qubit(kInvSqrt2, kInvSqrt2); }
Vector minus_x() { return qubit(kInvSqrt2, -kInvSqrt2); }
Vector plus_y() { return qubit(kInvSqrt2, kI * kInvSqrt2); }
Vector minus_y() { return qubit(kInvSqrt2, -kI * kInvSqrt2); }

Vector max_entangled(int d) {
  Vector v = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

}  // namespace basis

}  // namespace qsense
