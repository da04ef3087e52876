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

#include "pnm/problems/gradient_check.hpp"

#include <algorithm>
#include <cmath>

#include "pnm/core/error.hpp"

namespace pnm::problems {

Vector central_difference_gradient(const LossFunction& loss, const Vector& theta, double h) {
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be > 0");
  Vector fd(theta.size());
  Vector probe = theta;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    probe[i] = theta[i] + h;
    const double up = loss(probe);
    probe[i] = theta[i] - h;
    const double down = loss(probe);
    probe[i] = theta[i];
    fd[i] = (up - down) / (2.0 * h);
  }
  return fd;
}

double fd_gradient_check(const LossFunction& loss, const Vector& analytic,
                         const Vector& theta, double h) {
  require_same_dim(static_cast<std::size_t>(analytic.size()),
                   static_cast<std::size_t>(theta.size()), "fd_gradient_check");
  const Vector fd = central_difference_gradient(loss, theta, h);
  const double floor = std::max(1e-3 * fd.cwiseAbs().maxCoeff(), 1e-12);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < fd.size(); ++i) {
    const double denom = std::max(std::abs(fd[i]), floor);
    worst = std::max(worst, std::abs(analytic[i] - fd[i]) / denom);
  }
  return worst;
}

double fd_gradient_check(const GradientOracle& oracle, const Vector& theta, double h) {
  if (!oracle.has_full_gradient()) throw ConfigError("oracle has no full gradient");
  const GradientSample s = oracle.full(theta);
  if (!s.loss) throw ConfigError("oracle does not report a loss");
  return fd_gradient_check([&oracle](const Vector& t) { return oracle.loss(t); }, s.gradient,
                           theta, h);
}

}  // namespace pnm::problems
