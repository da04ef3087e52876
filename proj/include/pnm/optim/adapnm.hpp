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

#ifndef PNM_OPTIM_ADAPNM_HPP
#define PNM_OPTIM_ADAPNM_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/adam.hpp"
#include "pnm/optim/weight_decay.hpp"

namespace pnm::optim {

/// Adaptive positive-negative momentum.
///
/// With amsgrad (the default) the second moment is the running entrywise
/// maximum v_max and the step is
///   theta -= lr * m_hat / (norm(beta0) * (sqrt(v_hat) + eps)),
/// with m_hat = ((1+beta0) m_t - beta0 m_{t-1}) / (1 - beta1^t) and
/// v_hat = v_max / (1 - beta2^t). Without amsgrad, v_hat uses v_t and the
/// normalization is folded into m_hat. Bias correction counts from t = 1.
struct AdaPnmConfig {
  double lr = 1e-3;
  double beta0 = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  bool amsgrad = true;
  WeightDecaySpec weight_decay;

  void validate() const;
};

struct AdaPnmState {
  explicit AdaPnmState(std::size_t dim);

  const Vector& latest() const;

  std::array<Vector, 2> slots;
  Vector v;
  Vector v_max;
  Vector effective_gradient;
  std::int64_t t = 0;
};

void adapnm_step(AdaPnmState& state, const AdaPnmConfig& config, ParamVector& theta,
                 const GradientSample& g);

/// The AdaPNM configuration whose trajectory equals `adam` (Adam or AMSGrad,
/// matching adam.amsgrad).
AdaPnmConfig adapnm_recovering_adam(const AdamConfig& adam);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_ADAPNM_HPP
