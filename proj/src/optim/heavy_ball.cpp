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

#include "pnm/optim/heavy_ball.hpp"

#include <string>

#include "pnm/core/error.hpp"
#include "step_common.hpp"

namespace pnm::optim {

void HbConfig::validate() const {
  detail::require_lr(lr);
  detail::require_unit_interval(beta1, "beta1");
  if (!(beta3 > 0.0 && beta3 <= 1.0)) {
    throw ConfigError("beta3 must lie in (0, 1], got " + std::to_string(beta3));
  }
  weight_decay.validate();
}

HbState::HbState(std::size_t dim)
    : momentum(Vector::Zero(static_cast<Eigen::Index>(dim))),
      effective_gradient(Vector::Zero(static_cast<Eigen::Index>(dim))) {}

void hb_step(HbState& state, const HbConfig& config, ParamVector& theta,
             const GradientSample& g) {
  detail::require_state_dim(static_cast<std::size_t>(state.momentum.size()), theta);
  detail::prepare_gradient(theta, g, config.weight_decay, state.t, state.effective_gradient);

  state.momentum = config.beta1 * state.momentum + config.beta3 * state.effective_gradient;
  Vector& values = theta.mutable_values();
  values.noalias() -= config.lr * state.momentum;
  decay_parameters(config.weight_decay, config.lr, values);
  ++state.t;
}

}  // namespace pnm::optim
