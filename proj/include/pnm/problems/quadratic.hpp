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

#ifndef PNM_PROBLEMS_QUADRATIC_HPP
#define PNM_PROBLEMS_QUADRATIC_HPP

#include <utility>

#include "pnm/core/oracle.hpp"
#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"

namespace pnm::problems {

/// f(theta) = f0 + 1/2 (theta - theta*)^T H (theta - theta*), H symmetric
/// positive definite. Deterministic: stochastic() returns the full gradient.
class QuadraticModel : public GradientOracle {
 public:
  QuadraticModel(ParamVector minimum, Matrix hessian, double offset = 0.0);

  /// H = Q diag(eigenvalues) Q^T with a random orthogonal Q.
  static QuadraticModel random_spd(const Vector& eigenvalues, RngStream& rng,
                                   const Vector& minimum);

  std::size_t dim() const override { return minimum_.size(); }
  bool has_hessian() const override { return true; }

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;
  Matrix hessian(const Vector&) const override { return hessian_; }

  const ParamVector& minimum() const noexcept { return minimum_; }
  const Matrix& hessian_matrix() const noexcept { return hessian_; }
  double offset() const noexcept { return offset_; }
  double max_eigenvalue() const noexcept { return eig_max_; }
  double min_eigenvalue() const noexcept { return eig_min_; }

 private:
  ParamVector minimum_;
  Matrix hessian_;
  double offset_;
  double eig_min_ = 0.0;
  double eig_max_ = 0.0;
};

/// (loss, gradient) of the model at theta.
std::pair<double, Vector> quadratic_eval(const QuadraticModel& model, const Vector& theta);

/// Random orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
Matrix random_orthogonal(std::size_t n, RngStream& rng);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_QUADRATIC_HPP
