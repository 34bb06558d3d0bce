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

#ifndef QSENSE_NELDER_MEAD_HPP
#define QSENSE_NELDER_MEAD_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace qsense {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double f_tolerance = 1e-12;  // spread of simplex values
  double x_tolerance = 1e-10;  // simplex diameter
  int max_evaluations = 5000;
};

template <typename Scalar>
struct NelderMeadResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  Scalar value{};
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes `f` from `start` with the standard reflection / expansion /
/// contraction / shrink simplex moves (coefficients 1, 2, 1/2, 1/2).
template <typename Scalar, typename F>
NelderMeadResult<Scalar> nelder_mead(F&& f, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& start,
                                     const NelderMeadOptions& options = {}) {
  using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = start.size();

  std::vector<Point> simplex(n + 1, start);
  std::vector<Scalar> values(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) simplex[i + 1](i) += options.initial_step;

  int evaluations = 0;
  auto eval = [&](const Point& p) {
    ++evaluations;
    return static_cast<Scalar>(f(p));
  };
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  bool converged = false;
  while (evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    Scalar diameter = 0;
    for (const auto& p : simplex) diameter = std::max(diameter, (p - simplex[best]).cwiseAbs().maxCoeff());
    if (values[worst] - values[best] <= options.f_tolerance && diameter <= options.x_tolerance) {
      converged = true;
      break;
    }
    if (values[worst] - values[best] <= options.f_tolerance * 1e-3) {
      converged = true;
      break;
    }

    Point centroid = Point::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<Scalar>(n);

    const Point reflected = centroid + (centroid - simplex[worst]);
    const Scalar f_reflected = eval(reflected);
    if (f_reflected < values[best]) {
      const Point expanded = centroid + 2 * (centroid - simplex[worst]);
      const Scalar f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < values[worst];
    const Point contracted = outside ? Point(centroid + Scalar(0.5) * (reflected - centroid))
                                     : Point(centroid + Scalar(0.5) * (simplex[worst] - centroid));
    const Scalar f_contracted = eval(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + Scalar(0.5) * (simplex[i] - simplex[best]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_index = static_cast<std::size_t>(best_it - values.begin());
  return {simplex[best_index], *best_it, evaluations, converged};
}

}  // namespace qsense

#endif  // QSENSE_NELDER_MEAD_HPP
