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

#include "pnm/optim/weight_decay.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::optim {

void WeightDecaySpec::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("weight decay lambda must be finite and >= 0, got " +
                      std::to_string(lambda));
  }
}

void decay_gradient(const WeightDecaySpec& spec, const Vector& theta, Vector& grad) {
  if (spec.mode != WeightDecayMode::kL2 || spec.lambda == 0.0) return;
  require_same_dim(static_cast<std::size_t>(theta.size()),
                   static_cast<std::size_t>(grad.size()), "decay_gradient");
  grad.noalias() += spec.lambda * theta;
}

void decay_parameters(const WeightDecaySpec& spec, double lr, Vector& theta) {
  if (spec.mode != WeightDecayMode::kDecoupled || spec.lambda == 0.0) return;
  theta -= (lr * spec.lambda) * theta;
}

void apply_weight_decay(const WeightDecaySpec& spec, DecayPhase phase, double lr,
                        Vector& theta, Vector& grad) {
  spec.validate();
  if (phase == DecayPhase::kGradient) {
    decay_gradient(spec, theta, grad);
  } else {
    decay_parameters(spec, lr, theta);
  }
}

std::string_view to_string(WeightDecayMode mode) {
  switch (mode) {
    case WeightDecayMode::kNone: return "none";
    case WeightDecayMode::kL2: return "l2";
    case WeightDecayMode::kDecoupled: return "decoupled";
  }
  return "none";
}

WeightDecayMode parse_weight_decay_mode(std::string_view name) {
  if (name == "none") return WeightDecayMode::kNone;
  if (name == "l2") return WeightDecayMode::kL2;
  if (name == "decoupled") return WeightDecayMode::kDecoupled;
  throw ConfigError("unknown weight decay mode '" + std::string(name) + "'");
}

}  // namespace pnm::optim
