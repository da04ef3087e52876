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

#ifndef PNM_POSTERIOR_STATIONARY_HPP
#define PNM_POSTERIOR_STATIONARY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/optim/optimizer.hpp"
#include "pnm/problems/quadratic.hpp"

namespace pnm::posterior {

struct StationaryEstimate {
  ParamVector mean = ParamVector::zeros(1);
  Matrix covariance;
  /// Batch-means standard error of each mean coordinate (100 batches).
  Vector mean_standard_error;
  std::size_t burn_in = 0;
  std::size_t samples = 0;
  std::size_t thin = 1;
};

struct StationaryOptions {
  /// Optimizer steps discarded before sampling; 0 picks ten thinning strides.
  std::size_t burn_in = 0;
  /// Retained samples, at least 1e4.
  std::size_t samples = 10000;
  /// Steps between retained samples; 0 picks ceil(1 / (lr * smallest eigenvalue)).
  std::size_t thin = 0;
  /// Starting point; the minimum when absent.
  std::optional<Vector> initial;
};

/// Runs the optimizer on g = H (theta - theta*) + C^{1/2} xi and collects the
/// empirical mean and covariance of the iterates. Throws NumericalError
/// naming the step when ||theta - theta*|| exceeds 1e6 * max(1, initial offset).
StationaryEstimate simulate_stationary(const problems::QuadraticModel& model,
                                       const Matrix& noise_covariance,
                                       const optim::OptimizerSpec& optimizer,
                                       const StationaryOptions& options, RngStream& rng);

/// Pools independent chains. Pairwise tree reduction in index order, so the
/// result depends only on the input order.
StationaryEstimate merge_estimates(const std::vector<StationaryEstimate>& parts);

}  // namespace pnm::posterior

#endif  // PNM_POSTERIOR_STATIONARY_HPP
