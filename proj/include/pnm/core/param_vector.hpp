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

#ifndef PNM_CORE_PARAM_VECTOR_HPP
#define PNM_CORE_PARAM_VECTOR_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <optional>

namespace pnm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense vector of model parameters.
///
/// Construction rejects empty and non-finite input; afterwards the values may
/// be mutated freely by optimizers through mutable_values().
class ParamVector {
 public:
  explicit ParamVector(Vector values);
  ParamVector(std::initializer_list<double> values);

  static ParamVector zeros(std::size_t dim);

  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }

  const Vector& values() const noexcept { return values_; }
  Vector& mutable_values() noexcept { return values_; }

  bool all_finite() const noexcept { return values_.allFinite(); }

 private:
  Vector values_;
};

/// One draw from a gradient oracle: g = grad f(theta) + noise.
struct GradientSample {
  Vector gradient;
  std::optional<double> loss;
};

/// Throws DimensionError when the two sizes differ.
void require_same_dim(std::size_t a, std::size_t b, const char* context);

double dot(const ParamVector& a, const ParamVector& b);
double dot(const Vector& a, const Vector& b);

}  // namespace pnm

#endif  // PNM_CORE_PARAM_VECTOR_HPP
