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

#include "pnm/optim/adam.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"
#include "step_common.hpp"

namespace pnm::optim {

void AdamConfig::validate() const {
  detail::require_lr(lr);
  detail::require_unit_interval(beta1, "beta1");
  detail::require_unit_interval(beta2, "beta2");
  if (!(eps > 0.0)) throw ConfigError("eps must be > 0, got " + std::to_string(eps));
  weight_decay.validate();
}

AdamState::AdamState(std::size_t dim)
    : m(Vector::Zero(static_cast<Eigen::Index>(dim))),
      v(Vector::Zero(static_cast<Eigen::Index>(dim))),
      v_max(Vector::Zero(static_cast<Eigen::Index>(dim))),
      effective_gradient(Vector::Zero(static_cast<Eigen::Index>(dim))) {}

namespace {

void step_impl(AdamState& state, const AdamConfig& config, bool amsgrad,
               ParamVector& theta, const GradientSample& g) {
  detail::require_state_dim(static_cast<std::size_t>(state.m.size()), theta);
  if (!(config.eps > 0.0)) throw ConfigError("eps must be > 0");
  detail::prepare_gradient(theta, g, config.weight_decay, state.t, state.effective_gradient);

  ++state.t;
  const double t = static_cast<double>(state.t);
  const double bias1 = 1.0 - std::pow(config.beta1, t);
  const double bias2 = 1.0 - std::pow(config.beta2, t);
  const Vector& grad = state.effective_gradient;

  state.m = config.beta1 * state.m + (1.0 - config.beta1) * grad;
  state.v = config.beta2 * state.v + (1.0 - config.beta2) * grad.cwiseAbs2();
  if (amsgrad) state.v_max = state.v_max.cwiseMax(state.v);
  const Vector& second = amsgrad ? state.v_max : state.v;

  Vector& values = theta.mutable_values();
  values.array() -= config.lr * (state.m.array() / bias1) /
                    ((second.array() / bias2).sqrt() + config.eps);
  decay_parameters(config.weight_decay, config.lr, values);
}

}  // namespace

void adam_step(AdamState& state, const AdamConfig& config, ParamVector& theta,
               const GradientSample& g) {
  step_impl(state, config, config.amsgrad, theta, g);
}

void amsgrad_step(AdamState& state, const AdamConfig& config, ParamVector& theta,
                  const GradientSample& g) {
  step_impl(state, config, true, theta, g);
}

}  // namespace pnm::optim
