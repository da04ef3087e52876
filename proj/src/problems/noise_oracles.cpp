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

#include "pnm/problems/noise_oracles.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::problems {

Matrix psd_sqrt(const Matrix& c) {
  if (c.rows() != c.cols()) throw DimensionError("psd_sqrt: matrix not square");
  const Matrix sym = 0.5 * (c + c.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  Vector values = eig.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < -1e-10 * scale) {
      throw ConfigError("covariance is not positive semidefinite (eigenvalue " +
                        std::to_string(values[i]) + ")");
    }
    values[i] = std::sqrt(std::max(values[i], 0.0));
  }
  return eig.eigenvectors() * values.asDiagonal() * eig.eigenvectors().transpose();
}

AdditiveNoiseOracle::AdditiveNoiseOracle(std::shared_ptr<const GradientOracle> base,
                                         Matrix covariance)
    : base_(std::move(base)), covariance_(std::move(covariance)) {
  const auto n = static_cast<Eigen::Index>(base_->dim());
  if (covariance_.rows() != n || covariance_.cols() != n) {
    throw DimensionError("AdditiveNoiseOracle: covariance shape does not match oracle dim");
  }
  root_ = psd_sqrt(covariance_);
  trace_ = covariance_.trace();
}

AdditiveNoiseOracle::AdditiveNoiseOracle(std::shared_ptr<const GradientOracle> base,
                                         double variance)
    : base_(std::move(base)) {
  if (!(variance >= 0.0)) throw ConfigError("noise variance must be >= 0");
  const auto n = static_cast<Eigen::Index>(base_->dim());
  covariance_ = variance * Matrix::Identity(n, n);
  scalar_std_ = std::sqrt(variance);
  isotropic_ = true;
  trace_ = variance * static_cast<double>(n);
}

void AdditiveNoiseOracle::full(const Vector& theta, GradientSample& out) const {
  base_->full(theta, out);
}

void AdditiveNoiseOracle::add_noise(Vector& gradient, RngStream& rng) const {
  if (isotropic_) {
    for (Eigen::Index i = 0; i < gradient.size(); ++i) gradient[i] += scalar_std_ * rng.normal();
    return;
  }
  Vector xi(gradient.size());
  rng.fill_normal(xi);
  gradient.noalias() += root_ * xi;
}

void AdditiveNoiseOracle::stochastic(const Vector& theta, RngStream& rng,
                                     GradientSample& out) const {
  base_->full(theta, out);
  add_noise(out.gradient, rng);
}

PureNoiseOracle::PureNoiseOracle(std::size_t dim, double variance)
    : dim_(dim), variance_(variance) {
  if (dim == 0) throw DimensionError("PureNoiseOracle: dim must be >= 1");
  if (!(variance >= 0.0)) throw ConfigError("noise variance must be >= 0");
}

void PureNoiseOracle::full(const Vector& theta, GradientSample& out) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim_, "PureNoiseOracle");
  out.gradient = Vector::Zero(theta.size());
  out.loss.reset();
}

void PureNoiseOracle::stochastic(const Vector& theta, RngStream& rng,
                                 GradientSample& out) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim_, "PureNoiseOracle");
  out.gradient.resize(theta.size());
  const double sd = std::sqrt(variance_);
  for (Eigen::Index i = 0; i < theta.size(); ++i) out.gradient[i] = sd * rng.normal();
  out.loss.reset();
}

BoundedNoiseOracle::BoundedNoiseOracle(std::shared_ptr<const GradientOracle> base,
                                       double half_width)
    : base_(std::move(base)), half_width_(half_width) {
  if (!(half_width >= 0.0)) throw ConfigError("noise half width must be >= 0");
}

std::optional<double> BoundedNoiseOracle::noise_second_moment() const {
  return static_cast<double>(base_->dim()) * half_width_ * half_width_ / 3.0;
}

void BoundedNoiseOracle::full(const Vector& theta, GradientSample& out) const {
  base_->full(theta, out);
}

void BoundedNoiseOracle::stochastic(const Vector& theta, RngStream& rng,
                                    GradientSample& out) const {
  base_->full(theta, out);
  for (Eigen::Index i = 0; i < out.gradient.size(); ++i) {
    out.gradient[i] += half_width_ * (2.0 * rng.uniform() - 1.0);
  }
}

}  // namespace pnm::problems
