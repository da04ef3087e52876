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

#include "pnm/optim/adapnm.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"
#include "pnm/optim/pnm.hpp"
#include "step_common.hpp"

namespace pnm::optim {

void AdaPnmConfig::validate() const {
  detail::require_lr(lr);
  detail::require_unit_interval(beta1, "beta1");
  detail::require_unit_interval(beta2, "beta2");
  if (!std::isfinite(beta0)) throw ConfigError("beta0 must be finite");
  if (!(eps > 0.0)) throw ConfigError("eps must be > 0, got " + std::to_string(eps));
  weight_decay.validate();
}

AdaPnmState::AdaPnmState(std::size_t dim)
    : slots{Vector::Zero(static_cast<Eigen::Index>(dim)),
            Vector::Zero(static_cast<Eigen::Index>(dim))},
      v(Vector::Zero(static_cast<Eigen::Index>(dim))),
      v_max(Vector::Zero(static_cast<Eigen::Index>(dim))),
      effective_gradient(Vector::Zero(static_cast<Eigen::Index>(dim))) {}

const Vector& AdaPnmState::latest() const {
  return slots[static_cast<std::size_t>((t + 1) % 2)];
}

void adapnm_step(AdaPnmState& state, const AdaPnmConfig& config, ParamVector& theta,
                 const GradientSample& g) {
  detail::require_state_dim(static_cast<std::size_t>(state.v.size()), theta);
  if (!(config.eps > 0.0)) throw ConfigError("eps must be > 0");
  detail::prepare_gradient(theta, g, config.weight_decay, state.t, state.effective_gradient);

  Vector& current = state.slots[static_cast<std::size_t>(state.t % 2)];
  const Vector& other = state.slots[static_cast<std::size_t>((state.t + 1) % 2)];
  ++state.t;
  const double t = static_cast<double>(state.t);
  const double beta = config.beta1 * config.beta1;
  const double bias1 = 1.0 - std::pow(config.beta1, t);
  const double bias2 = 1.0 - std::pow(config.beta2, t);
  const double norm = pnm_normalization(config.beta0);
  const Vector& grad = state.effective_gradient;

  current = beta * current + (1.0 - beta) * grad;
  state.v = config.beta2 * state.v + (1.0 - config.beta2) * grad.cwiseAbs2();

  Vector& values = theta.mutable_values();
  const auto pair = (1.0 + config.beta0) * current.array() - config.beta0 * other.array();
  if (config.amsgrad) {
    state.v_max = state.v_max.cwiseMax(state.v);
    const auto m_hat = pair / bias1;
    const auto v_hat = state.v_max.array() / bias2;
    values.array() -= config.lr * m_hat / (norm * (v_hat.sqrt() + config.eps));
  } else {
    const auto m_hat = pair / (bias1 * norm);
    const auto v_hat = state.v.array() / bias2;
    values.array() -= config.lr * m_hat / (v_hat.sqrt() + config.eps);
  }
  decay_parameters(config.weight_decay, config.lr, values);
}

AdaPnmConfig adapnm_recovering_adam(const AdamConfig& adam) {
  AdaPnmConfig config;
  config.beta1 = adam.beta1;
  config.beta2 = adam.beta2;
  config.eps = adam.eps;
  config.amsgrad = adam.amsgrad;
  config.weight_decay = adam.weight_decay;
  config.beta0 = -adam.beta1 / (1.0 + adam.beta1);
  config.lr = adam.lr * pnm_normalization(config.beta0);
  return config;
}

}  // namespace pnm::optim
