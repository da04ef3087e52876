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

#include "pnm/core/oracle.hpp"

#include "pnm/core/error.hpp"

namespace pnm {

Matrix GradientOracle::hessian(const Vector&) const {
  throw ConfigError("oracle does not provide a Hessian");
}

GradientSample GradientOracle::full(const Vector& theta) const {
  GradientSample out;
  full(theta, out);
  return out;
}

GradientSample GradientOracle::stochastic(const Vector& theta, RngStream& rng) const {
  GradientSample out;
  stochastic(theta, rng, out);
  return out;
}

double GradientOracle::loss(const Vector& theta) const {
  GradientSample out;
  full(theta, out);
  return out.loss.value_or(0.0);
}

}  // namespace pnm
