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

#include "qsense/erasure.hpp"

#include <array>
#include <cmath>

#include "qsense/info.hpp"
#include "qsense/schmidt.hpp"

namespace qsense {

namespace {

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Vector two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
  Vector v(4);
  v << a00, a01, a10, a11;
  return v;
}

std::array<Vector, 4> bell_states() {
  const double h = 1.0 / std::sqrt(2.0);
  return {two_qubit(h, 0, 0, h), two_qubit(h, 0, 0, -h), two_qubit(0, h, -h, 0),
          two_qubit(0, h, h, 0)};
}

int bits_for(std::size_t outcomes) {
  int bits = 0;
  while ((std::size_t{1} << bits) < outcomes) ++bits;
  return bits;
}

ErasureProtocol parity_protocol(int corr_pauli, int anti_pauli) {
  ErasureProtocol p;
  p.name = "sl_1bit";
  p.effects = {projector(two_qubit(1, 0, 0, 0)) + projector(two_qubit(0, 0, 0, 1)),
               projector(two_qubit(0, 1, 0, 0)) + projector(two_qubit(0, 0, 1, 0))};
  p.corrections = {pauli::by_index(corr_pauli), pauli::by_index(anti_pauli)};
  p.channel_bits = 1;
  return p;
}

}  // namespace

void NoiseModel::validate() const {
  if (!std::isfinite(phase_jitter_sigma) || phase_jitter_sigma < 0.0) {
    throw ValidationError("noise: phase_jitter_sigma must be finite and >= 0");
  }
  if (!std::isfinite(bell_visibility) || bell_visibility < 0.0 || bell_visibility > 1.0) {
    throw ValidationError("noise: bell_visibility must lie in [0, 1]");
  }
}

void ErasureProtocol::validate() const {
  if (effects.empty()) throw ValidationError("erasure protocol: no outcomes");
  if (effects.size() != corrections.size()) {
    throw ValidationError("erasure protocol: " + std::to_string(effects.size()) + " outcomes but " +
                          std::to_string(corrections.size()) + " corrections");
  }
  if (channel_bits != bits_for(effects.size())) {
    throw ValidationError("erasure protocol: channel_bits does not match the outcome count");
  }
  const auto dim = effects.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& e : effects) {
    if (e.rows() != dim || e.cols() != dim) throw ValidationError("erasure protocol: effect dimensions differ");
    if (!is_hermitian(e)) throw ValidationError("erasure protocol: effect is not Hermitian");
    if (eigh(e).values.minCoeff() < -kStateTolerance) {
      throw ValidationError("erasure protocol: effect is not positive");
    }
    sum += e;
  }
  if (max_abs_diff(sum, Matrix::Identity(dim, dim)) > kStateTolerance) {
    throw ValidationError("erasure protocol: effects do not sum to identity");
  }
  const auto sys_dim = corrections.front().rows();
  for (const auto& c : corrections) {
    if (c.rows() != sys_dim || !is_unitary(c)) throw ValidationError("erasure protocol: correction is not unitary");
  }
}

ErasureProtocol protocol_cr(double /*phi*/) {
  ErasureProtocol p;
  p.name = "cr_1bit";
  p.effects = {projector(basis::plus_x()), projector(basis::minus_x())};
  p.corrections = {pauli::identity(), Matrix(kI * pauli::x())};
  p.channel_bits = 1;
  return p;
}

ErasureProtocol protocol_sl_2bit(double /*theta*/) {
  ErasureProtocol p;
  p.name = "sl_2bit";
  for (const auto& b : bell_states()) p.effects.push_back(projector(b));
  p.corrections = {pauli::identity(), pauli::z(), pauli::x(), pauli::y()};
  p.channel_bits = 2;
  p.two_photon = true;
  return p;
}

ErasureProtocol protocol_sl_1bit(double theta) {
  const auto u = build_sl(theta);
  const auto memory = memory_state(MemoryPrep::Entangled);
  auto best = parity_protocol(3, 1);
  double best_info = run_erasure(u, best, NoiseModel::ideal(), memory).post_restoration_info;
  for (int corr = 0; corr < 4; ++corr) {
    for (int anti = 0; anti < 4; ++anti) {
      auto candidate = parity_protocol(corr, anti);
      const double info = run_erasure(u, candidate, NoiseModel::ideal(), memory).post_restoration_info;
      if (info > best_info + 1e-12) {
        best = std::move(candidate);
        best_info = info;
      }
    }
  }
  return best;
}

ErasureProtocol protocol_bell_heralded(const BipartiteUnitary& u) {
  if (u.dim_s() != 2 || u.dim_m() != 2) {
    throw ValidationError("protocol_bell_heralded: qubit-qubit sensors only");
  }
  ErasureProtocol p;
  p.name = "bell_heralded";
  p.channel_bits = 2;
  p.two_photon = true;
  const Matrix& w = u.matrix();
  for (const auto& b : bell_states()) {
    p.effects.push_back(projector(b));
    Matrix heralded = Matrix::Zero(2, 2);
    for (int so = 0; so < 2; ++so) {
      for (int si = 0; si < 2; ++si) {
        for (int mo = 0; mo < 2; ++mo) {
          for (int mi = 0; mi < 2; ++mi) {
            heralded(so, si) += std::conj(b(2 * mo + mi)) * w(2 * so + mo, 2 * si + mi);
          }
        }
      }
    }
    heralded /= std::sqrt(2.0);
    const double weight = (heralded * heralded.adjoint()).trace().real() / 2.0;
    if (weight < kStateTolerance) {
      p.corrections.push_back(pauli::identity());
      continue;
    }
    const Matrix normalized = heralded / std::sqrt(weight);
    if (!is_unitary(normalized, 1e-8)) {
      throw ValidationError("protocol_bell_heralded: a Bell outcome heralds a non-unitary operator");
    }
    p.corrections.push_back(normalized.adjoint());
  }
  return p;
}

ErasureProtocol protocol_trivial(int memory_dim, int system_dim) {
  ErasureProtocol p;
  p.name = "trivial";
  p.effects = {Matrix::Identity(memory_dim, memory_dim)};
  p.corrections = {Matrix::Identity(system_dim, system_dim)};
  p.channel_bits = 0;
  return p;
}

DensityMatrix dephase(const DensityMatrix& state, double sigma, const FactorLabel& target) {
  if (sigma == 0.0) return state;
  const auto& factors = state.factors();
  const int d = factors[index_of(factors, target)].dim;
  const double keep = std::exp(-0.5 * sigma * sigma);
  const std::array<FactorLabel, 1> targets{target};
  Matrix diagonal = Matrix::Zero(state.dim(), state.dim());
  for (int k = 0; k < d; ++k) {
    Matrix unit = Matrix::Zero(d, d);
    unit(k, k) = 1.0;
    const Matrix p = lift(unit, factors, targets);
    diagonal += p * state.matrix() * p;
  }
  Matrix out = keep * state.matrix() + (1.0 - keep) * diagonal;
  return DensityMatrix(factors, 0.5 * (out + out.adjoint()));
}

Matrix degrade_projector(const Matrix& projector, double visibility) {
  const Matrix diagonal = projector.diagonal().asDiagonal();
  return visibility * projector + (1.0 - visibility) * diagonal;
}

DensityMatrix apply_noise(const DensityMatrix& state, const NoiseModel& noise) {
  noise.validate();
  return dephase(state, noise.phase_jitter_sigma);
}

ErasureProtocol apply_noise(const ErasureProtocol& protocol, const NoiseModel& noise) {
  noise.validate();
  if (!protocol.two_photon || noise.bell_visibility == 1.0) return protocol;
  ErasureProtocol out = protocol;
  for (auto& e : out.effects) e = degrade_projector(e, noise.bell_visibility);
  return out;
}

ErasureResult run_erasure(const BipartiteUnitary& u, const ErasureProtocol& protocol,
                          const NoiseModel& noise, const Ket& memory) {
  protocol.validate();
  const auto rho = apply_noise(choi_state(u, memory), noise);
  const auto effective = apply_noise(protocol, noise);

  const auto& factors = rho.factors();
  std::vector<FactorLabel> memory_labels;
  int memory_dim = 1;
  for (const auto& f : factors) {
    if (f.label == labels::S || f.label == labels::SA) continue;
    memory_labels.push_back(f.label);
    memory_dim *= f.dim;
  }
  if (effective.effects.front().rows() != memory_dim) {
    throw ValidationError("run_erasure: effects act on dimension " +
                          std::to_string(effective.effects.front().rows()) + ", memory has " +
                          std::to_string(memory_dim));
  }
  if (effective.corrections.front().rows() != u.dim_s()) {
    throw ValidationError("run_erasure: correction dimension does not match the system");
  }

  const std::array<FactorLabel, 2> keep{labels::S, labels::SA};
  const FactorList kept{factors[index_of(factors, labels::S)], factors[index_of(factors, labels::SA)]};
  const int ancilla_dim = kept[1].dim;
  Matrix restored = Matrix::Zero(u.dim_s() * ancilla_dim, u.dim_s() * ancilla_dim);

  ErasureResult result;
  result.channel_bits = protocol.channel_bits;
  for (std::size_t k = 0; k < effective.effects.size(); ++k) {
    const Matrix effect = lift(effective.effects[k], factors, memory_labels);
    const Matrix conditional = partial_trace(effect * rho.matrix(), factors, keep);
    result.outcome_probs.push_back(conditional.trace().real());
    const Matrix c = kron(effective.corrections[k], Matrix::Identity(ancilla_dim, ancilla_dim));
    restored += c * conditional * c.adjoint();
  }
  const DensityMatrix post(kept, 0.5 * (restored + restored.adjoint()));
  const std::array<FactorLabel, 1> s{labels::S};
  const std::array<FactorLabel, 1> sa{labels::SA};
  result.post_restoration_info = mutual_information(post, s, sa);
  result.outcome_entropy = shannon_entropy(result.outcome_probs);
  return result;
}

double required_channel_bits(const BipartiteUnitary& u) {
  return std::log2(static_cast<double>(schmidt_rank(schmidt_decompose(u))));
}

std::vector<std::pair<double, double>> erasure_bit_entropy_curve(const std::vector<double>& thetas) {
  const auto memory = memory_state(MemoryPrep::Entangled);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(thetas.size());
  for (double theta : thetas) {
    const auto r = run_erasure(build_sl(theta), protocol_sl_2bit(theta), NoiseModel::ideal(), memory);
    curve.emplace_back(theta, r.outcome_entropy);
  }
  return curve;
}

}  // namespace qsense
