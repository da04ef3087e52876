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

#include "pnm/optim/reformulation.hpp"

#include "pnm/core/error.hpp"

namespace pnm::optim {

PnmReformulation::PnmReformulation(const PnmConfig& config, const Vector& theta0)
    : eta0_(config.effective_lr()),
      beta0_(config.beta0),
      beta_(config.beta1 * config.beta1),
      alpha_(eta0_ * (1.0 - beta_)),
      history_{theta0, theta0, theta0} {
  if (config.weight_decay.mode == WeightDecayMode::kDecoupled && config.weight_decay.lambda > 0) {
    throw ConfigError("PnmReformulation: decoupled weight decay has no x-recursion form");
  }
}

PnmReformulation::Residuals PnmReformulation::observe(const Vector& theta_next,
                                                      const PnmState& state) {
  require_same_dim(static_cast<std::size_t>(theta_next.size()),
                   static_cast<std::size_t>(history_[0].size()), "PnmReformulation");
  const Vector& g = state.effective_gradient;
  const Vector& x_t = history_[0];
  const Vector& x_t1 = history_[1];
  const Vector& x_t2 = history_[2];

  // After the step, state.latest() is m_t.
  Vector x_next = theta_next + eta0_ * beta0_ * state.latest();

  Residuals r;
  const Vector predicted = x_t - alpha_ * g + beta_ * (x_t1 - x_t2);
  r.recursion = (x_next - predicted).cwiseAbs().maxCoeff();

  const Vector z_next = (x_next - beta_ * x_t1) / (1.0 - beta_);
  const Vector z_now = (x_t - beta_ * x_t2) / (1.0 - beta_);
  r.averaged = (z_next - z_now + (alpha_ / (1.0 - beta_)) * g).cwiseAbs().maxCoeff();

  history_[2] = std::move(history_[1]);
  history_[1] = std::move(history_[0]);
  history_[0] = std::move(x_next);
  return r;
}

}  // namespace pnm::optim
