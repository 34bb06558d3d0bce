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

#ifndef QSENSE_TESTS_ORACLE_HPP
#define QSENSE_TESTS_ORACLE_HPP

// Reference computations for the tests. Plain index loops and Eigen solvers
// only; nothing here calls into the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double entropy_bits(const CMat& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (rho + rho.adjoint()));
  double h = 0.0;
  for (double l : es.eigenvalues()) {
    if (l > 1e-14) h -= l * std::log(l);
  }
  return h / std::log(2.0);
}

inline double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 1e-15) h -= x * std::log2(x);
  }
  return h;
}

/// Reduced state of `rho` (row-major multi-index over `dims`) on `keep`, in
/// the order of `keep`.
inline CMat reduce(const CMat& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  std::vector<int> strides(n, 1);
  for (int k = n - 2; k >= 0; --k) strides[k] = strides[k + 1] * dims[k + 1];
  int kept_dim = 1;
  for (int k : keep) kept_dim *= dims[k];
  CMat out = CMat::Zero(kept_dim, kept_dim);
  const int total = static_cast<int>(rho.rows());
  auto digits = [&](int idx) {
    std::vector<int> d(n);
    for (int k = 0; k < n; ++k) d[k] = (idx / strides[k]) % dims[k];
    return d;
  };
  auto kept_index = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int k : keep) idx = idx * dims[k] + d[k];
    return idx;
  };
  for (int r = 0; r < total; ++r) {
    const auto dr = digits(r);
    for (int c = 0; c < total; ++c) {
      const auto dc = digits(c);
      bool traced_equal = true;
      for (int k = 0; k < n && traced_equal; ++k) {
        bool kept = false;
        for (int q : keep) kept = kept || q == k;
        if (!kept && dr[k] != dc[k]) traced_equal = false;
      }
      if (traced_equal) out(kept_index(dr), kept_index(dc)) += rho(r, c);
    }
  }
  return out;
}

inline double mutual_info(const CMat& rho, const std::vector<int>& dims, const std::vector<int>& a,
                          const std::vector<int>& b) {
  std::vector<int> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return entropy_bits(reduce(rho, dims, a)) + entropy_bits(reduce(rho, dims, b)) - entropy_bits(reduce(rho, dims, ab));
}

/// Singular values of the realigned matrix R[(i j),(k l)] = U[(i k),(j l)]
/// divided by sqrt(d_s d_m): the operator-Schmidt coefficients.
inline Eigen::VectorXd schmidt_coefficients(const CMat& u, int ds, int dm) {
  CMat r(ds * ds, dm * dm);
  for (int i = 0; i < ds; ++i)
    for (int j = 0; j < ds; ++j)
      for (int k = 0; k < dm; ++k)
        for (int l = 0; l < dm; ++l) r(i * ds + j, k * dm + l) = u(i * dm + k, j * dm + l);
  Eigen::JacobiSVD<CMat> svd(r);
  return svd.singularValues() / std::sqrt(static_cast<double>(ds * dm));
}

inline double schmidt_strength(const CMat& u, int ds, int dm) {
  std::vector<double> p;
  for (double l : schmidt_coefficients(u, ds, dm)) p.push_back(l * l);
  return shannon_bits(p);
}

/// Pure post-interaction state on (S, S_A, M, R) where the memory starts in
/// `memory` on (M, R), R being a spectator of dimension mem.size() / dm.
inline CVec dual_state(const CMat& u, int ds, int dm, const CVec& memory) {
  const int dr = static_cast<int>(memory.size()) / dm;
  CVec psi = CVec::Zero(ds * ds * dm * dr);
  const double norm = 1.0 / std::sqrt(static_cast<double>(ds));
  for (int s = 0; s < ds; ++s)
    for (int a = 0; a < ds; ++a)
      for (int m = 0; m < dm; ++m)
        for (int r = 0; r < dr; ++r) {
          cd amp = 0.0;
          for (int m0 = 0; m0 < dm; ++m0) amp += u(s * dm + m, a * dm + m0) * memory(m0 * dr + r);
          psi(((s * ds + a) * dm + m) * dr + r) = norm * amp;
        }
  return psi;
}

struct Information {
  double acquired;
  double residual;
};

inline Information information(const CMat& u, int ds, int dm, const CVec& memory) {
  const int dr = static_cast<int>(memory.size()) / dm;
  const CVec psi = dual_state(u, ds, dm, memory);
  const CMat rho = psi * psi.adjoint();
  const std::vector<int> dims{ds, ds, dm, dr};
  return {mutual_info(rho, dims, {2, 3}, {1}), mutual_info(rho, dims, {0}, {1})};
}

/// Classical mutual information of a uniform two-letter code `encode` on S,
/// memory `memory` on M, projective readout `decode` on M.
inline double cmi(const CMat& u, const CVec& memory, const std::array<CVec, 2>& encode,
                  const std::array<CVec, 2>& decode) {
  double joint[2][2];
  for (int x = 0; x < 2; ++x) {
    const CVec in = kron(encode[x], memory);
    const CVec out = u * in;
    for (int y = 0; y < 2; ++y) {
      double p = 0.0;
      for (int s = 0; s < 2; ++s) {
        cd amp = 0.0;
        for (int m = 0; m < 2; ++m) amp += std::conj(decode[y](m)) * out(s * 2 + m);
        p += std::norm(amp);
      }
      joint[x][y] = 0.5 * p;
    }
  }
  double i = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const double py = joint[0][y] + joint[1][y];
      if (joint[x][y] > 1e-15) i += joint[x][y] * std::log2(joint[x][y] / (0.5 * py));
    }
  return i;
}

inline std::array<CVec, 2> bloch_basis(double polar, double azimuth) {
  CVec up(2), down(2);
  up << std::cos(polar / 2), std::polar(1.0, azimuth) * std::sin(polar / 2);
  down << -std::polar(1.0, -azimuth) * std::sin(polar / 2), std::cos(polar / 2);
  return {up, down};
}

/// Best decode for a fixed code, by exhaustive Bloch-sphere grid.
inline double cmi_grid_best_decode(const CMat& u, const CVec& memory, const std::array<CVec, 2>& encode,
                                   int steps = 90) {
  const double pi = std::acos(-1.0);
  double best = 0.0;
  for (int a = 0; a <= steps; ++a)
    for (int b = 0; b < 2 * steps; ++b)
      best = std::max(best, cmi(u, memory, encode, bloch_basis(pi * a / steps, pi * b / steps)));
  return best;
}

/// I(S:S_A) after heralded corrections: projectors act on (M, R), corrections
/// on S; conditional states summed.
inline double post_restoration(const CMat& u, int ds, int dm, const CVec& memory, const std::vector<CMat>& effects,
                               const std::vector<CMat>& corrections) {
  const int dr = static_cast<int>(memory.size()) / dm;
  const CVec psi = dual_state(u, ds, dm, memory);
  const CMat rho = psi * psi.adjoint();
  const std::vector<int> dims{ds, ds, dm, dr};
  CMat restored = CMat::Zero(ds * ds, ds * ds);
  for (std::size_t k = 0; k < effects.size(); ++k) {
    const CMat e = kron(CMat::Identity(ds * ds, ds * ds), effects[k]);
    const CMat conditional = reduce(e * rho, dims, {0, 1});
    const CMat c = kron(corrections[k], CMat::Identity(ds, ds));
    restored += c * conditional * c.adjoint();
  }
  return mutual_info(restored, {ds, ds}, {0}, {1});
}

}  // namespace oracle

#endif  // QSENSE_TESTS_ORACLE_HPP
