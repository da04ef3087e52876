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

#ifndef PNM_OPTIM_REFORMULATION_HPP
#define PNM_OPTIM_REFORMULATION_HPP

#include <array>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/pnm.hpp"

namespace pnm::optim {

/// Follows a PNM run through its heavy-ball-like rewrite.
///
/// With eta0 = lr / norm(beta0), beta = beta1^2 and alpha = eta0 (1 - beta):
///   x_t = theta_t + eta0 beta0 m_{t-1}
///   x_{t+1} = x_t - alpha g_t + beta (x_{t-1} - x_{t-2})
///   z_t = (x_t - beta x_{t-2}) / (1 - beta),   z_{t+1} - z_t = -alpha/(1-beta) g_t
/// with x_{-2} = x_{-1} = x_0 = theta_0. Both relations are exact algebra, so
/// the residuals measure floating-point drift only. Decoupled decay breaks the
/// rewrite; L2 decay is fine because g_t is the decayed gradient.
class PnmReformulation {
 public:
  struct Residuals {
    double recursion = 0.0;  // max-abs residual of the x recursion
    double averaged = 0.0;   // max-abs residual of the z increment identity
  };

  PnmReformulation(const PnmConfig& config, const Vector& theta0);

  /// Call right after pnm_step with the updated theta and state.
  Residuals observe(const Vector& theta_next, const PnmState& state);

  const Vector& x() const { return history_[0]; }

 private:
  double eta0_;
  double beta0_;
  double beta_;
  double alpha_;
  // x_t, x_{t-1}, x_{t-2}
  std::array<Vector, 3> history_;
};

}  // namespace pnm::optim

#endif  // PNM_OPTIM_REFORMULATION_HPP
