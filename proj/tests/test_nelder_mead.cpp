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

#include <cmath>

#include "qsense/nelder_mead.hpp"

using qsense::nelder_mead;
using qsense::NelderMeadOptions;

TEST_CASE("quadratic bowl") {
  auto bowl = [](const Eigen::VectorXd& x) { return (x - Eigen::Vector3d(1.0, -2.0, 0.5)).squaredNorm(); };
  const auto r = nelder_mead<double>(bowl, Eigen::VectorXd::Zero(3));
  CHECK(r.converged);
  CHECK(r.value < 1e-12);
  CHECK(r.x(0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x(1) == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("rosenbrock valley") {
  auto rosen = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
  };
  NelderMeadOptions options;
  options.max_evaluations = 20000;
  const auto r = nelder_mead<double>(rosen, Eigen::Vector2d(-1.2, 1.0), options);
  CHECK(r.value < 1e-8);
  CHECK(r.x(0) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("evaluation budget is respected") {
  int calls = 0;
  auto counted = [&](const Eigen::VectorXd& x) {
    ++calls;
    return std::sin(10 * x(0)) + x.squaredNorm();
  };
  NelderMeadOptions options;
  options.max_evaluations = 50;
  const auto r = nelder_mead<double>(counted, Eigen::VectorXd::Ones(4), options);
  CHECK(r.evaluations == calls);
  CHECK(calls <= 50 + 4 + 2);
}
