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

#ifndef PNM_OPTIM_HEAVY_BALL_HPP
#define PNM_OPTIM_HEAVY_BALL_HPP

#include <cstddef>
#include <cstdint>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/weight_decay.hpp"

namespace pnm::optim {

/// Heavy Ball: m = beta1*m + beta3*g; theta -= lr*m.
/// beta1 = 0, beta3 = 1 is vanilla SGD; beta3 = 1 - beta1 is the EMA form.
struct HbConfig {
  double lr = 0.1;
  double beta1 = 0.9;
  double beta3 = 1.0;
  WeightDecaySpec weight_decay;

  static HbConfig sgd(double lr) { return HbConfig{lr, 0.0, 1.0, {}}; }
  void validate() const;
};

struct HbState {
  explicit HbState(std::size_t dim);

  Vector momentum;
  Vector effective_gradient;  // last gradient after L2 decay
  std::int64_t t = 0;
};

void hb_step(HbState& state, const HbConfig& config, ParamVector& theta,
             const GradientSample& g);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_HEAVY_BALL_HPP
