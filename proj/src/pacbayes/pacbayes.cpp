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

#include "pnm/pacbayes/pacbayes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>

#include "pnm/core/error.hpp"

namespace pnm::pacbayes {
namespace {

Eigen::LLT<Matrix> factor(const Matrix& c, const char* what) {
  Eigen::LLT<Matrix> llt(c);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(std::string(what) + " covariance is not positive definite");
  }
  return llt;
}

double log_det(const Eigen::LLT<Matrix>& llt) {
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

void GaussianDist::validate() const {
  const auto n = static_cast<Eigen::Index>(mean.size());
  if (covariance.rows() != n || covariance.cols() != n) {
    throw DimensionError("covariance must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!covariance.allFinite()) throw NumericalError("covariance has non-finite entries");
  const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NumericalError("covariance must be symmetric");
  }
  factor(covariance, "Gaussian");
}

GaussianDist GaussianDist::isotropic(ParamVector mean, double variance) {
  if (!(variance > 0.0)) throw ConfigError("variance must be > 0");
  const auto n = static_cast<Eigen::Index>(mean.size());
  Matrix cov = Matrix::Identity(n, n) * variance;
  return {std::move(mean), std::move(cov)};
}

double gaussian_kl(const GaussianDist& q, const GaussianDist& p) {
  q.validate();
  p.validate();
  require_same_dim(q.mean.size(), p.mean.size(), "gaussian_kl");
  const auto lq = factor(q.covariance, "Q");
  const auto lp = factor(p.covariance, "P");
  const double n = static_cast<double>(q.mean.size());

  const Matrix lq_dense = lq.matrixL();
  const Matrix whitened = lp.matrixL().solve(lq_dense);
  const Vector diff = q.mean.values() - p.mean.values();
  const Vector z = lp.matrixL().solve(diff);

  const double kl =
      0.5 * (log_det(lp) - log_det(lq) + whitened.squaredNorm() + z.squaredNorm() - n);
  return std::max(kl, 0.0);
}

void PacBayesSetting::validate() const {
  if (!(lr > 0.0)) throw ConfigError("learning rate must be > 0");
  if (batch < 1) throw ConfigError("batch size must be >= 1");
  if (dataset_size < 2) throw ConfigError("dataset size must be >= 2");
  if (!(prior_variance > 0.0)) throw ConfigError("prior variance must be > 0");
  if (dim < 1) throw ConfigError("dimension must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (!(mean_norm_sq >= 0.0)) throw ConfigError("squared mean norm must be >= 0");
}

double kl_q_gamma(double gamma, const PacBayesSetting& setting) {
  setting.validate();
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  const double n = static_cast<double>(setting.dim);
  const double v = setting.prior_variance;
  const double s = setting.sgd_variance();
  const double log_ratio = std::log(v) - std::log(gamma) - std::log(s);
  return 0.5 * n * log_ratio + 0.5 * n * gamma * s / v + 0.5 * setting.mean_norm_sq / v -
         0.5 * n;
}

double kl_q_gamma_grad(double gamma, const PacBayesSetting& setting) {
  setting.validate();
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  const double n = static_cast<double>(setting.dim);
  return 0.5 * n *
         (critical_ratio(setting.lr, setting.batch, setting.prior_variance) - 1.0 / gamma);
}

double pac_bound(double kl, std::size_t dataset_size, double delta) {
  if (!(kl >= 0.0)) throw ConfigError("KL must be >= 0");
  if (dataset_size < 2) throw ConfigError("dataset size must be >= 2");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  const double n = static_cast<double>(dataset_size);
  return 4.0 * std::sqrt((kl + std::log(2.0 * n / delta)) / n);
}

double critical_ratio(double lr, std::size_t batch, double prior_variance) {
  if (!(lr > 0.0)) throw ConfigError("learning rate must be > 0");
  if (batch == 0) throw ConfigError("batch size must be >= 1");
  if (!(prior_variance > 0.0)) throw ConfigError("prior variance must be > 0");
  return lr / (2.0 * static_cast<double>(batch) * prior_variance);
}

OptimalGamma optimal_gamma(const PacBayesSetting& setting) {
  setting.validate();
  const double ratio = critical_ratio(setting.lr, setting.batch, setting.prior_variance);
  if (ratio >= 1.0) return {1.0, false};
  return {2.0 * static_cast<double>(setting.batch) * setting.prior_variance / setting.lr, true};
}

}  // namespace pnm::pacbayes
