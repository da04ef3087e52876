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

#ifndef PNM_PROBLEMS_ROSENBROCK_HPP
#define PNM_PROBLEMS_ROSENBROCK_HPP

#include <utility>

#include "pnm/core/oracle.hpp"

namespace pnm::problems {

// f(x, y) = (1 - x)^2 + 100 (y - x^2)^2
class Rosenbrock : public GradientOracle {
 public:
  std::size_t dim() const override { return 2; }
  bool has_hessian() const override { return true; }

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;
  Matrix hessian(const Vector& theta) const override;
};

std::pair<double, Vector> rosenbrock_eval(const Vector& theta);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_ROSENBROCK_HPP
