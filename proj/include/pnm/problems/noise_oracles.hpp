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

#ifndef PNM_PROBLEMS_NOISE_ORACLES_HPP
#define PNM_PROBLEMS_NOISE_ORACLES_HPP

#include <memory>

#include "pnm/core/oracle.hpp"

namespace pnm::problems {

/// Symmetric square root of a PSD matrix via eigendecomposition. Small
/// negative eigenvalues (> -1e-10 relative) are clamped to zero.
Matrix psd_sqrt(const Matrix& c);

/// g = grad f(theta) + C^{1/2} xi with xi standard normal.
class AdditiveNoiseOracle : public GradientOracle {
 public:
  AdditiveNoiseOracle(std::shared_ptr<const GradientOracle> base, Matrix covariance);
  /// Isotropic noise sigma^2 I.
  AdditiveNoiseOracle(std::shared_ptr<const GradientOracle> base, double variance);

  std::size_t dim() const override { return base_->dim(); }
  bool has_hessian() const override { return base_->has_hessian(); }
  std::optional<double> noise_second_moment() const override { return trace_; }

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;
  Matrix hessian(const Vector& theta) const override { return base_->hessian(theta); }

  const Matrix& covariance() const noexcept { return covariance_; }
  /// Adds one noise draw to `gradient`.
  void add_noise(Vector& gradient, RngStream& rng) const;

 private:
  std::shared_ptr<const GradientOracle> base_;
  Matrix covariance_;
  Matrix root_;
  double scalar_std_ = 0.0;
  bool isotropic_ = false;
  double trace_ = 0.0;
};

/// Zero true gradient; every draw is sigma * xi.
class PureNoiseOracle : public GradientOracle {
 public:
  PureNoiseOracle(std::size_t dim, double variance);

  std::size_t dim() const override { return dim_; }
  std::optional<double> noise_second_moment() const override {
    return variance_ * static_cast<double>(dim_);
  }

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;

 private:
  std::size_t dim_;
  double variance_;
};

/// g = grad f(theta) + u with u uniform on [-a, a]^n, so ||g - grad f|| is
/// bounded and E||u||^2 = n a^2 / 3.
class BoundedNoiseOracle : public GradientOracle {
 public:
  BoundedNoiseOracle(std::shared_ptr<const GradientOracle> base, double half_width);

  std::size_t dim() const override { return base_->dim(); }
  bool has_hessian() const override { return base_->has_hessian(); }
  std::optional<double> noise_second_moment() const override;

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;
  Matrix hessian(const Vector& theta) const override { return base_->hessian(theta); }

 private:
  std::shared_ptr<const GradientOracle> base_;
  double half_width_;
};

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_NOISE_ORACLES_HPP
