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

#include "pnm/convergence/bound.hpp"

#include <algorithm>
#include <cmath>

#include "pnm/core/error.hpp"

namespace pnm::convergence {

void ConvergenceBoundInputs::validate() const {
  if (!(smoothness > 0.0)) throw ConfigError("smoothness constant must be > 0");
  if (!(step_constant > 0.0)) throw ConfigError("step constant must be > 0");
  if (!(gradient_bound >= 0.0)) throw ConfigError("gradient bound must be >= 0");
  if (!(noise_variance >= 0.0)) throw ConfigError("noise variance must be >= 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("beta must lie in [0, 1)");
  if (!(initial_loss >= loss_lower_bound)) {
    throw ConfigError("initial loss must be >= the loss lower bound");
  }
}

double ConvergenceBoundInputs::noise_constant() const {
  const double one_minus = 1.0 - beta;
  const double mix = beta + beta0 * one_minus;
  const double g2 = gradient_bound * gradient_bound;
  return step_constant *
         (smoothness * mix * mix * (g2 + noise_variance) +
          smoothness * one_minus * one_minus * noise_variance) /
         (one_minus * one_minus);
}

double gradient_norm_bound(const ConvergenceBoundInputs& inputs, std::int64_t t) {
  inputs.validate();
  if (t < 0) throw ConfigError("t must be >= 0");
  const double tp1 = static_cast<double>(t) + 1.0;
  const double root = std::sqrt(tp1);
  const double gap = inputs.initial_loss - inputs.loss_lower_bound;
  return 2.0 * gap / tp1 * std::max(2.0 * inputs.smoothness, root / inputs.step_constant) +
         inputs.noise_constant() / root;
}

double prescribed_step(double smoothness, double step_constant, std::int64_t horizon) {
  if (!(smoothness > 0.0)) throw ConfigError("smoothness constant must be > 0");
  if (!(step_constant > 0.0)) throw ConfigError("step constant must be > 0");
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  return std::min(1.0 / (2.0 * smoothness),
                  step_constant / std::sqrt(static_cast<double>(horizon)));
}

}  // namespace pnm::convergence
