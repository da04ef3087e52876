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

#ifndef PNM_PROBLEMS_DATASET_PROBLEMS_HPP
#define PNM_PROBLEMS_DATASET_PROBLEMS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pnm/core/oracle.hpp"
#include "pnm/problems/dataset.hpp"

namespace pnm::problems {

/// A loss that is a mean of per-sample terms over a finite dataset.
class DatasetProblem {
 public:
  virtual ~DatasetProblem() = default;

  virtual std::size_t dim() const = 0;
  virtual std::string name() const = 0;
  /// Throws when `data` does not fit this model.
  virtual void check(const FiniteDataset& data) const = 0;
  /// Mean loss over `rows`; when `grad` is non-null it receives the mean
  /// gradient (resized as needed).
  virtual double evaluate(const Vector& theta, const FiniteDataset& data,
                          std::span<const std::size_t> rows, Vector* grad) const = 0;

  /// Full-dataset evaluation in row order.
  double evaluate_all(const Vector& theta, const FiniteDataset& data, Vector* grad) const;
};

/// Mean of 1/2 (x^T w - y)^2; no bias term.
class LeastSquares : public DatasetProblem {
 public:
  explicit LeastSquares(std::size_t features) : features_(features) {}

  std::size_t dim() const override { return features_; }
  std::string name() const override { return "least_squares"; }
  void check(const FiniteDataset& data) const override;
  double evaluate(const Vector& theta, const FiniteDataset& data,
                  std::span<const std::size_t> rows, Vector* grad) const override;

  /// X^T X / N.
  static Matrix hessian(const FiniteDataset& data);
  /// Normal-equations minimizer.
  static Vector solve(const FiniteDataset& data);

 private:
  std::size_t features_;
};

/// Binary logistic regression on labels {0, 1}; theta = (w, b).
class LogisticRegression : public DatasetProblem {
 public:
  explicit LogisticRegression(std::size_t features) : features_(features) {}

  std::size_t dim() const override { return features_ + 1; }
  std::string name() const override { return "logistic"; }
  void check(const FiniteDataset& data) const override;
  double evaluate(const Vector& theta, const FiniteDataset& data,
                  std::span<const std::size_t> rows, Vector* grad) const override;

 private:
  std::size_t features_;
};

/// Mean loss and gradient over a uniformly drawn batch of B distinct rows.
GradientSample minibatch_gradient(const DatasetProblem& problem, const FiniteDataset& data,
                                  const Vector& theta, std::size_t batch, RngStream& rng);

/// Adapts a dataset problem to the oracle interface with a fixed batch size.
class DatasetOracle : public GradientOracle {
 public:
  DatasetOracle(std::shared_ptr<const DatasetProblem> problem,
                std::shared_ptr<const FiniteDataset> data, std::size_t batch);

  std::size_t dim() const override { return problem_->dim(); }
  std::optional<std::size_t> dataset_size() const override { return data_->size(); }
  std::optional<std::size_t> batch_size() const override { return batch_; }

  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override;
  void stochastic(const Vector& theta, RngStream& rng, GradientSample& out) const override;

  const DatasetProblem& problem() const noexcept { return *problem_; }
  const FiniteDataset& data() const noexcept { return *data_; }
  DatasetOracle with_batch(std::size_t batch) const { return {problem_, data_, batch}; }

 private:
  std::shared_ptr<const DatasetProblem> problem_;
  std::shared_ptr<const FiniteDataset> data_;
  std::size_t batch_;
};

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_DATASET_PROBLEMS_HPP
