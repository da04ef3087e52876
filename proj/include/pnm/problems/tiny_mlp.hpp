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

#ifndef PNM_PROBLEMS_TINY_MLP_HPP
#define PNM_PROBLEMS_TINY_MLP_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "pnm/problems/dataset_problems.hpp"

namespace pnm::problems {

/// One hidden tanh layer, softmax cross-entropy: d -> hidden -> K.
///
/// Parameter layout (row-major blocks): W1 (hidden x d), b1 (hidden),
/// W2 (K x hidden), b2 (K). Gradients are hand-derived backprop.
class TinyMlp : public DatasetProblem {
 public:
  static constexpr std::size_t kDefaultHidden = 16;

  TinyMlp(std::size_t inputs, std::size_t hidden, std::size_t classes);

  std::size_t dim() const override;
  std::string name() const override { return "tiny_mlp"; }
  void check(const FiniteDataset& data) const override;
  double evaluate(const Vector& theta, const FiniteDataset& data,
                  std::span<const std::size_t> rows, Vector* grad) const override;

  /// Weights ~ N(0, 1/fan_in), biases zero.
  Vector initial_weights(RngStream& rng) const;
  /// Predicted class per row of `features`.
  std::vector<int> predict(const Vector& theta, const Matrix& features) const;
  /// Fraction of rows whose arg-max class differs from the label.
  double classification_error(const Vector& theta, const FiniteDataset& data) const;
  /// Same, restricted to `rows`.
  double classification_error(const Vector& theta, const FiniteDataset& data,
                              std::span<const std::size_t> rows) const;

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t hidden() const noexcept { return hidden_; }
  std::size_t classes() const noexcept { return classes_; }

 private:
  Matrix logits(const Vector& theta, const Matrix& features) const;

  std::size_t inputs_;
  std::size_t hidden_;
  std::size_t classes_;
};

/// (loss, gradient) of the MLP on the given rows.
std::pair<double, Vector> tiny_mlp_eval(const TinyMlp& model, const Vector& weights,
                                        const FiniteDataset& data,
                                        std::span<const std::size_t> rows);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_TINY_MLP_HPP
