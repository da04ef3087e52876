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

#ifndef PNM_PACBAYES_PACBAYES_HPP
#define PNM_PACBAYES_PACBAYES_HPP

#include <cstddef>

#include "pnm/core/param_vector.hpp"

namespace pnm::pacbayes {

struct GaussianDist {
  ParamVector mean;
  Matrix covariance;

  /// Throws unless dimensions agree and the covariance is SPD.
  void validate() const;
  static GaussianDist isotropic(ParamVector mean, double variance);
};

/// KL(Q || P) for Gaussians, via Cholesky factors of both covariances.
double gaussian_kl(const GaussianDist& q, const GaussianDist& p);

/// Inputs to the closed-form KL of the rescaled SGD posterior
/// Q(gamma) = N(theta*, gamma * lr/(2B) I) against the prior P = N(0, prior_variance I).
struct PacBayesSetting {
  double lr = 0.0;
  std::size_t batch = 1;
  std::size_t dataset_size = 2;
  /// The regularization constant; the prior covariance is prior_variance * I.
  double prior_variance = 0.0;
  std::size_t dim = 1;
  double delta = 0.05;
  /// ||theta*||^2 of the posterior mean.
  double mean_norm_sq = 0.0;

  void validate() const;
  /// lr / (2B): the per-coordinate SGD posterior variance.
  double sgd_variance() const { return lr / (2.0 * static_cast<double>(batch)); }
};

/// (n/2) log(v / (gamma s)) + n gamma s / (2 v) + ||theta*||^2 / (2 v) - n/2
/// with s = lr/(2B) and v = prior_variance. Log-space throughout.
double kl_q_gamma(double gamma, const PacBayesSetting& setting);

/// d/dgamma of kl_q_gamma: (n/2) (lr / (2 B v) - 1/gamma).
double kl_q_gamma_grad(double gamma, const PacBayesSetting& setting);

/// 4 sqrt((kl + ln(2N/delta)) / N).
double pac_bound(double kl, std::size_t dataset_size, double delta);

/// lr / (2 B v). Below 1, raising gamma above 1 shrinks the KL.
double critical_ratio(double lr, std::size_t batch, double prior_variance);

struct OptimalGamma {
  double gamma = 1.0;
  /// False when the critical ratio is >= 1 and gamma = 1 is returned.
  bool improves = false;
};

/// 2 B v / lr, the stationary point of kl_q_gamma, when that exceeds 1.
OptimalGamma optimal_gamma(const PacBayesSetting& setting);

}  // namespace pnm::pacbayes

#endif  // PNM_PACBAYES_PACBAYES_HPP
