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

#ifndef PNM_OPTIM_ADAM_HPP
#define PNM_OPTIM_ADAM_HPP

#include <cstddef>
#include <cstdint>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/weight_decay.hpp"

namespace pnm::optim {

// Adam / AMSGrad baselines with the usual bias correction.
struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  bool amsgrad = false;
  WeightDecaySpec weight_decay;

  void validate() const;
};

struct AdamState {
  explicit AdamState(std::size_t dim);

  Vector m;
  Vector v;
  Vector v_max;
  Vector effective_gradient;
  std::int64_t t = 0;
};

/// Adam, or AMSGrad when config.amsgrad is set.
void adam_step(AdamState& state, const AdamConfig& config, ParamVector& theta,
               const GradientSample& g);
/// AMSGrad regardless of config.amsgrad.
void amsgrad_step(AdamState& state, const AdamConfig& config, ParamVector& theta,
                  const GradientSample& g);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_ADAM_HPP
