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

#include "pnm/problems/dataset_problems.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::problems {

double DatasetProblem::evaluate_all(const Vector& theta, const FiniteDataset& data,
                                    Vector* grad) const {
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return evaluate(theta, data, rows, grad);
}

void LeastSquares::check(const FiniteDataset& data) const {
  data.validate();
  require_same_dim(data.feature_dim(), features_, "LeastSquares features");
}

double LeastSquares::evaluate(const Vector& theta, const FiniteDataset& data,
                              std::span<const std::size_t> rows, Vector* grad) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim(), "LeastSquares theta");
  if (rows.empty()) throw ConfigError("LeastSquares: empty batch");
  if (grad) *grad = Vector::Zero(theta.size());
  double loss = 0.0;
  for (std::size_t r : rows) {
    const auto x = data.features.row(static_cast<Eigen::Index>(r));
    const double residual = x.dot(theta) - data.labels[r];
    loss += 0.5 * residual * residual;
    if (grad) grad->noalias() += residual * x.transpose();
  }
  const double inv = 1.0 / static_cast<double>(rows.size());
  if (grad) *grad *= inv;
  return loss * inv;
}

Matrix LeastSquares::hessian(const FiniteDataset& data) {
  return data.features.transpose() * data.features / static_cast<double>(data.size());
}

Vector LeastSquares::solve(const FiniteDataset& data) {
  Vector y(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) y[static_cast<Eigen::Index>(i)] = data.labels[i];
  const Matrix gram = data.features.transpose() * data.features;
  return gram.ldlt().solve(data.features.transpose() * y);
}

void LogisticRegression::check(const FiniteDataset& data) const {
  data.validate();
  require_same_dim(data.feature_dim(), features_, "LogisticRegression features");
  for (double y : data.labels) {
    if (y != 0.0 && y != 1.0) throw ConfigError("LogisticRegression: labels must be 0 or 1");
  }
}

double LogisticRegression::evaluate(const Vector& theta, const FiniteDataset& data,
                                    std::span<const std::size_t> rows, Vector* grad) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim(), "LogisticRegression theta");
  if (rows.empty()) throw ConfigError("LogisticRegression: empty batch");
  const auto d = static_cast<Eigen::Index>(features_);
  const auto w = theta.head(d);
  const double b = theta[d];
  if (grad) *grad = Vector::Zero(theta.size());
  double loss = 0.0;
  for (std::size_t r : rows) {
    const auto x = data.features.row(static_cast<Eigen::Index>(r));
    const double z = x.dot(w) + b;
    const double y = data.labels[r];
    // log(1 + e^z) - y z, evaluated stably.
    loss += (z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z))) - y * z;
    if (grad) {
      const double p = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
      grad->head(d).noalias() += (p - y) * x.transpose();
      (*grad)[d] += p - y;
    }
  }
  const double inv = 1.0 / static_cast<double>(rows.size());
  if (grad) *grad *= inv;
  return loss * inv;
}

GradientSample minibatch_gradient(const DatasetProblem& problem, const FiniteDataset& data,
                                  const Vector& theta, std::size_t batch, RngStream& rng) {
  const std::vector<std::size_t> rows = sample_batch(data.size(), batch, rng);
  GradientSample out;
  out.loss = problem.evaluate(theta, data, rows, &out.gradient);
  return out;
}

DatasetOracle::DatasetOracle(std::shared_ptr<const DatasetProblem> problem,
                             std::shared_ptr<const FiniteDataset> data, std::size_t batch)
    : problem_(std::move(problem)), data_(std::move(data)), batch_(batch) {
  problem_->check(*data_);
  if (batch_ == 0 || batch_ > data_->size()) {
    throw ConfigError("batch size must lie in [1, N]; got B=" + std::to_string(batch_) +
                      ", N=" + std::to_string(data_->size()));
  }
}

void DatasetOracle::full(const Vector& theta, GradientSample& out) const {
  out.loss = problem_->evaluate_all(theta, *data_, &out.gradient);
}

void DatasetOracle::stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const {
  const std::vector<std::size_t> rows = sample_batch(data_->size(), batch_, rng);
  out.loss = problem_->evaluate(theta, *data_, rows, &out.gradient);
}

}  // namespace pnm::problems
