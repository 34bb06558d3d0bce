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

#ifndef QSENSE_STATE_HPP
#define QSENSE_STATE_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsense/linalg.hpp"

namespace qsense {

enum class Role { System, Memory, SystemAncilla, MemoryAncilla };

/// Names a tensor factor: S, M, S_A, M_A, with an optional index for
/// multi-qubit memories (M1, M2).
struct FactorLabel {
  Role role = Role::System;
  int index = 0;

  auto operator<=>(const FactorLabel&) const = default;

  std::string name() const;
  static FactorLabel parse(std::string_view text);
};

namespace labels {
inline constexpr FactorLabel S{Role::System, 0};
inline constexpr FactorLabel M{Role::Memory, 0};
inline constexpr FactorLabel SA{Role::SystemAncilla, 0};
inline constexpr FactorLabel MA{Role::MemoryAncilla, 0};
inline constexpr FactorLabel M1{Role::Memory, 1};
inline constexpr FactorLabel M2{Role::Memory, 2};
}  // namespace labels

struct Factor {
  FactorLabel label;
  int dim = 2;

  bool operator==(const Factor&) const = default;
};

using FactorList = std::vector<Factor>;

int total_dim(std::span<const Factor> factors);
/// Position of `label` in `factors`; throws LabelError if absent.
std::size_t index_of(std::span<const Factor> factors, const FactorLabel& label);

/// Pure state on labeled tensor factors. Normalized within 1e-12.
class Ket {
 public:
  Ket(FactorList factors, Vector amplitudes);

  const FactorList& factors() const { return factors_; }
  const Vector& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

 private:
  FactorList factors_;
  Vector amplitudes_;
};

/// Mixed state on labeled tensor factors. Hermitian, unit trace and PSD within
/// 1e-10.
class DensityMatrix {
 public:
  DensityMatrix(FactorList factors, Matrix matrix);
  explicit DensityMatrix(const Ket& ket);

  const FactorList& factors() const { return factors_; }
  const Matrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  FactorList factors_;
  Matrix matrix_;
};

Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`, factors in their original order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const FactorLabel> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<FactorLabel> keep);

/// Unchecked partial trace on a raw operator; used for unnormalized
/// conditional states.
Matrix partial_trace(const Matrix& op, std::span<const Factor> factors,
                     std::span<const FactorLabel> keep);

/// Embeds `op`, acting on `targets` in the listed order, into the full space
/// described by `factors` (identity elsewhere).
Matrix lift(const Matrix& op, std::span<const Factor> factors,
            std::span<const FactorLabel> targets);

/// Entropy in bits. Eigenvalues at or below 1e-12 contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Matrix& hermitian);

/// Shannon entropy in bits. Entries down to -1e-12 are clamped to zero and the
/// vector renormalized.
double shannon_entropy(std::span<const double> p);

/// H(A) + H(B) - H(AB) for two disjoint label groups of `rho`.
double mutual_information(const DensityMatrix& rho, std::span<const FactorLabel> a,
                          std::span<const FactorLabel> b);

/// Single-qubit basis vectors: |+z> = (1, 0), |+-x> = (1, +-1)/sqrt2,
/// |+-y> = (1, +-i)/sqrt2.
namespace basis {
Vector plus_z();
Vector minus_z();
Vector plus_x();
Vector minus_x();
Vector plus_y();
Vector minus_y();
/// sum_i |ii> / sqrt(d) on a d x d space.
Vector max_entangled(int d);
}  // namespace basis

}  // namespace qsense

#endif  // QSENSE_STATE_HPP
