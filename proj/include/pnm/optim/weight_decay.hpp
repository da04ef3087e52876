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

#ifndef PNM_OPTIM_WEIGHT_DECAY_HPP
#define PNM_OPTIM_WEIGHT_DECAY_HPP

#include <string_view>

#include "pnm/core/param_vector.hpp"

namespace pnm::optim {

enum class WeightDecayMode { kNone, kL2, kDecoupled };

/// L2 adds lambda*theta to the gradient before the momentum update; decoupled
/// subtracts lr*lambda*theta from the parameters after the step. `lr` is the
/// optimizer's base learning rate, never the normalized PNM step.
struct WeightDecaySpec {
  WeightDecayMode mode = WeightDecayMode::kNone;
  double lambda = 0.0;

  void validate() const;
};

enum class DecayPhase { kGradient, kParameters };

void decay_gradient(const WeightDecaySpec& spec, const Vector& theta, Vector& grad);
void decay_parameters(const WeightDecaySpec& spec, double lr, Vector& theta);

/// Dispatches on `phase`; the other operand is left untouched.
void apply_weight_decay(const WeightDecaySpec& spec, DecayPhase phase, double lr,
                        Vector& theta, Vector& grad);

std::string_view to_string(WeightDecayMode mode);
WeightDecayMode parse_weight_decay_mode(std::string_view name);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_WEIGHT_DECAY_HPP
