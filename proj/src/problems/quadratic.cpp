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

#include "pnm/problems/quadratic.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::problems {

QuadraticModel::QuadraticModel(ParamVector minimum, Matrix hessian, double offset)
    : minimum_(std::move(minimum)), hessian_(std::move(hessian)), offset_(offset) {
  const auto n = static_cast<Eigen::Index>(minimum_.size());
  if (hessian_.rows() != n || hessian_.cols() != n) {
    throw DimensionError("QuadraticModel: Hessian must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  if (!hessian_.allFinite() || !std::isfinite(offset_)) {
    throw NumericalError("QuadraticModel: non-finite Hessian or offset");
  }
  const double asym = (hessian_ - hessian_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw ConfigError("QuadraticModel: Hessian not symmetric (max |H - H^T| = " +
                      std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hessian_, Eigen::EigenvaluesOnly);
  eig_min_ = eig.eigenvalues().minCoeff();
  eig_max_ = eig.eigenvalues().maxCoeff();
  if (!(eig_min_ > 0.0)) {
    throw ConfigError("QuadraticModel: Hessian not positive definite (min eigenvalue " +
                      std::to_string(eig_min_) + ")");
  }
}

QuadraticModel QuadraticModel::random_spd(const Vector& eigenvalues, RngStream& rng,
                                          const Vector& minimum) {
  const auto n = static_cast<std::size_t>(eigenvalues.size());
  const Matrix q = random_orthogonal(n, rng);
  Matrix h = q * eigenvalues.asDiagonal() * q.transpose();
  h = 0.5 * (h + h.transpose()).eval();
  return QuadraticModel(ParamVector(minimum), std::move(h));
}

void QuadraticModel::full(const Vector& theta, GradientSample& out) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim(), "QuadraticModel");
  const Vector diff = theta - minimum_.values();
  out.gradient.noalias() = hessian_ * diff;
  out.loss = offset_ + 0.5 * diff.dot(out.gradient);
}

void QuadraticModel::stochastic(const Vector& theta, RngStream&, GradientSample& out) const {
  full(theta, out);
}

std::pair<double, Vector> quadratic_eval(const QuadraticModel& model, const Vector& theta) {
  GradientSample s = model.full(theta);
  return {*s.loss, std::move(s.gradient)};
}

Matrix random_orthogonal(std::size_t n, RngStream& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  Matrix a(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < k; ++i) a(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

}  // namespace pnm::problems
