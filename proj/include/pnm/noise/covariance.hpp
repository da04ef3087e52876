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

#ifndef PNM_NOISE_COVARIANCE_HPP
#define PNM_NOISE_COVARIANCE_HPP

#include <cstddef>

#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/problems/dataset.hpp"
#include "pnm/problems/dataset_problems.hpp"

namespace pnm::noise {

struct CovarianceEstimate {
  Matrix matrix;
  std::size_t sample_count = 0;
  /// Set when the batch covers the whole dataset, so minibatch noise vanishes.
  bool degenerate = false;
};

/// Sample covariance (1/S) sum (g_s - grad f)(g_s - grad f)^T over S fresh
/// minibatches of size `batch`, centred on the exact full gradient.
/// Requires samples >= 1000.
CovarianceEstimate estimate_gradient_noise_covariance(const problems::DatasetProblem& problem,
                                                      const problems::FiniteDataset& data,
                                                      const Vector& theta, std::size_t batch,
                                                      std::size_t samples, RngStream& rng);

double pearson_correlation(const Vector& a, const Vector& b);

}  // namespace pnm::noise

#endif  // PNM_NOISE_COVARIANCE_HPP
