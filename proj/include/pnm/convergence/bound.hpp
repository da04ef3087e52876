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

#ifndef PNM_CONVERGENCE_BOUND_HPP
#define PNM_CONVERGENCE_BOUND_HPP

#include <cstdint>

namespace pnm::convergence {

/// Constants of the PNM convergence guarantee.
struct ConvergenceBoundInputs {
  double smoothness = 1.0;        // L
  double gradient_bound = 0.0;    // G, sup ||grad f||
  double noise_variance = 0.0;    // sigma^2, bound on E||g - grad f||^2
  double step_constant = 1.0;     // C
  double initial_loss = 0.0;      // f(theta_0)
  double loss_lower_bound = 0.0;  // f*
  double beta = 0.81;             // beta1^2
  double beta0 = 1.0;

  /// L, C > 0; G, sigma^2 >= 0; beta in [0, 1); f(theta_0) >= f*.
  void validate() const;
  /// C [L (beta + beta0 (1-beta))^2 (G^2 + sigma^2) + L (1-beta)^2 sigma^2] / (1-beta)^2.
  double noise_constant() const;
};

/// 2 (f(theta_0) - f*) / (t+1) * max{2L, sqrt(t+1)/C} + C1 / sqrt(t+1):
/// a bound on min_{k<=t} E||grad f(theta_k)||^2.
double gradient_norm_bound(const ConvergenceBoundInputs& inputs, std::int64_t t);

/// The normalized step min{1/(2L), C/sqrt(horizon)} for a run of `horizon`
/// = t+1 steps. The PNM learning rate is this times pnm_normalization(beta0).
double prescribed_step(double smoothness, double step_constant, std::int64_t horizon);

}  // namespace pnm::convergence

#endif  // PNM_CONVERGENCE_BOUND_HPP
