// Copyright 2026 The pnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pnm/problems/rosenbrock.hpp"

#include "pnm/core/error.hpp"

namespace pnm::problems {

std::pair<double, Vector> rosenbrock_eval(const Vector& theta) {
  require_same_dim(static_cast<std::size_t>(theta.size()), 2, "rosenbrock");
  const double x = theta[0];
  const double y = theta[1];
  const double a = 1.0 - x;
  const double b = y - x * x;
  Vector grad(2);
  grad << -2.0 * a - 400.0 * x * b, 200.0 * b;
  return {a * a + 100.0 * b * b, std::move(grad)};
}

void Rosenbrock::full(const Vector& theta, GradientSample& out) const {
  auto [loss, grad] = rosenbrock_eval(theta);
  out.loss = loss;
  out.gradient = std::move(grad);
}

void Rosenbrock::stochastic(const Vector& theta, RngStream&, GradientSample& out) const {
  full(theta, out);
}

Matrix Rosenbrock::hessian(const Vector& theta) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), 2, "rosenbrock");
  const double x = theta[0];
  const double y = theta[1];
  Matrix h(2, 2);
  h << 2.0 - 400.0 * (y - x * x) + 800.0 * x * x, -400.0 * x,
       -400.0 * x, 200.0;
  return h;
}

}  // namespace pnm::problems
