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

#include "pnm/noise/covariance.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::noise {

CovarianceEstimate estimate_gradient_noise_covariance(const problems::DatasetProblem& problem,
                                                      const problems::FiniteDataset& data,
                                                      const Vector& theta, std::size_t batch,
                                                      std::size_t samples, RngStream& rng) {
  if (samples < 1000) throw ConfigError("covariance estimate needs at least 1000 samples");
  problem.check(data);
  const auto n = static_cast<Eigen::Index>(problem.dim());
  if (theta.size() != n) {
    throw DimensionError("theta has " + std::to_string(theta.size()) + " entries, problem expects " +
                         std::to_string(n));
  }
  if (batch == 0 || batch > data.size()) {
    throw ConfigError("batch size must lie in [1, N]");
  }

  CovarianceEstimate est;
  est.sample_count = samples;
  if (batch == data.size()) {
    est.matrix = Matrix::Zero(n, n);
    est.degenerate = true;
    return est;
  }

  Vector full_grad;
  problem.evaluate_all(theta, data, &full_grad);
  Matrix acc = Matrix::Zero(n, n);
  Vector g(n);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto rows = problems::sample_batch(data.size(), batch, rng);
    problem.evaluate(theta, data, rows, &g);
    g -= full_grad;
    acc.selfadjointView<Eigen::Lower>().rankUpdate(g);
  }
  est.matrix = acc.selfadjointView<Eigen::Lower>();
  est.matrix /= static_cast<double>(samples);
  return est;
}

double pearson_correlation(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw DimensionError("pearson_correlation needs two vectors of equal length >= 2");
  }
  const Vector da = a.array() - a.mean();
  const Vector db = b.array() - b.mean();
  const double denom = std::sqrt(da.squaredNorm() * db.squaredNorm());
  if (denom == 0.0) throw NumericalError("pearson_correlation: zero variance input");
  return da.dot(db) / denom;
}

}  // namespace pnm::noise
