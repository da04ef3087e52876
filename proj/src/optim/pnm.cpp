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

#include "pnm/optim/pnm.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"
#include "step_common.hpp"

namespace pnm::optim {

double pnm_normalization(double beta0) {
  return std::sqrt((1.0 + beta0) * (1.0 + beta0) + beta0 * beta0);
}

void PnmConfig::validate() const {
  detail::require_lr(lr);
  detail::require_unit_interval(beta1, "beta1");
  if (!(beta0 >= -1.0) || !std::isfinite(beta0)) {
    throw ConfigError("beta0 must be finite and >= -1, got " + std::to_string(beta0));
  }
  weight_decay.validate();
}

PnmState::PnmState(std::size_t dim)
    : slots{Vector::Zero(static_cast<Eigen::Index>(dim)),
            Vector::Zero(static_cast<Eigen::Index>(dim))},
      effective_gradient(Vector::Zero(static_cast<Eigen::Index>(dim))) {}

const Vector& PnmState::latest() const { return slots[static_cast<std::size_t>((t + 1) % 2)]; }
const Vector& PnmState::previous() const { return slots[static_cast<std::size_t>(t % 2)]; }

void pnm_step(PnmState& state, const PnmConfig& config, ParamVector& theta,
              const GradientSample& g) {
  detail::require_state_dim(static_cast<std::size_t>(state.slots[0].size()), theta);
  detail::prepare_gradient(theta, g, config.weight_decay, state.t, state.effective_gradient);

  const double beta = config.beta1 * config.beta1;
  Vector& current = state.slots[static_cast<std::size_t>(state.t % 2)];
  const Vector& other = state.slots[static_cast<std::size_t>((state.t + 1) % 2)];
  current = beta * current + (1.0 - beta) * state.effective_gradient;

  const double step = config.effective_lr();
  Vector& values = theta.mutable_values();
  values.noalias() -= step * ((1.0 + config.beta0) * current - config.beta0 * other);
  decay_parameters(config.weight_decay, config.lr, values);
  ++state.t;
}

PnmConfig pnm_recovering_momentum(double lr, double beta1) {
  PnmConfig config;
  config.beta1 = beta1;
  config.beta0 = -beta1 / (1.0 + beta1);
  config.lr = lr * pnm_normalization(config.beta0);
  return config;
}

}  // namespace pnm::optim
