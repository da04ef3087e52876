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

#ifndef PNM_CONVERGENCE_EMPIRICAL_RATE_HPP
#define PNM_CONVERGENCE_EMPIRICAL_RATE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pnm/convergence/bound.hpp"
#include "pnm/core/oracle.hpp"
#include "pnm/core/param_vector.hpp"

namespace pnm::convergence {

struct RateOptions {
  std::vector<std::int64_t> horizons{100, 1000, 10000};
  std::size_t seeds = 20;
  std::uint64_t base_seed = 0;
  /// L used by the step rule.
  double smoothness = 1.0;
  double step_constant = 1.0;
  double beta0 = 1.0;
  double beta1 = 0.9;
  /// f*, a lower bound on the loss.
  double loss_lower_bound = 0.0;
  Vector initial;
  /// Evaluate the Hessian at every visited point to measure L (needs
  /// has_hessian); otherwise only at the start.
  bool track_hessian = false;
  std::size_t threads = 1;
};

struct RatePoint {
  std::int64_t horizon = 0;
  double step = 0.0;           // normalized step min{1/(2L), C/sqrt(T)}
  double mean_min_grad_sq = 0.0;
  double std_min_grad_sq = 0.0;  // population std over seeds
  /// Constants measured over every seed's trajectory at this horizon.
  double measured_smoothness = 0.0;
  double measured_gradient_bound = 0.0;
  double measured_noise_variance = 0.0;
  double bound = 0.0;  // gradient_norm_bound with the measured constants, t = T-1
};

struct RateResult {
  std::vector<RatePoint> points;
  /// Least-squares fit of log(mean_min_grad_sq) on log(T).
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t seeds = 0;
};

/// Runs stochastic PNM from `initial` for each horizon T with the prescribed
/// step, recording min_k ||grad f(theta_k)||^2 (k = 0..T-1, full gradient)
/// for every seed. Seed s uses the same stream at every horizon. Throws
/// NumericalError on non-finite iterates.
RateResult empirical_rate(const GradientOracle& oracle, const RateOptions& options);

/// Slope and intercept of the ordinary least-squares line through (x, y).
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pnm::convergence

#endif  // PNM_CONVERGENCE_EMPIRICAL_RATE_HPP
