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

#ifndef PNM_OPTIM_PNM_HPP
#define PNM_OPTIM_PNM_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/weight_decay.hpp"

namespace pnm::optim {

/// sqrt((1 + beta0)^2 + beta0^2): the noise magnitude of the positive-negative
/// pair relative to a single momentum buffer. Never below sqrt(1/2).
double pnm_normalization(double beta0);

/// Stochastic positive-negative momentum.
///
///   m_t = beta1^2 m_{t-2} + (1 - beta1^2) g_t
///   theta -= lr / pnm_normalization(beta0) * ((1 + beta0) m_t - beta0 m_{t-1})
///
/// The odd and even steps feed two disjoint momentum buffers. beta0 > 0 gives
/// the pair opposite signs; beta0 = -beta1/(1+beta1) recovers ordinary EMA
/// momentum (see pnm_recovering_momentum).
struct PnmConfig {
  double lr = 0.1;
  double beta0 = 1.0;
  double beta1 = 0.9;
  WeightDecaySpec weight_decay;

  void validate() const;
  /// The normalized step actually applied to the momentum pair.
  double effective_lr() const { return lr / pnm_normalization(beta0); }
};

/// The two buffers alternate: step t writes slot t % 2, which held m_{t-2}.
/// Both start at zero, i.e. m_{-1} = m_{-2} = 0.
struct PnmState {
  explicit PnmState(std::size_t dim);

  /// m_{t-1} once t steps have been taken (zero before the first step).
  const Vector& latest() const;
  /// m_{t-2} once t steps have been taken.
  const Vector& previous() const;

  std::array<Vector, 2> slots;
  Vector effective_gradient;
  std::int64_t t = 0;
};

void pnm_step(PnmState& state, const PnmConfig& config, ParamVector& theta,
              const GradientSample& g);

/// The PNM configuration whose trajectory equals Heavy Ball with
/// beta3 = 1 - beta1 and learning rate `lr`.
PnmConfig pnm_recovering_momentum(double lr, double beta1);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_PNM_HPP
