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

#include "pnm/core/param_vector.hpp"

#include <string>

#include "pnm/core/error.hpp"

namespace pnm {
namespace {

Vector checked(Vector values) {
  if (values.size() < 1) {
    throw DimensionError("ParamVector: dimension must be at least 1");
  }
  if (!values.allFinite()) {
    throw NumericalError("ParamVector: non-finite entry at construction");
  }
  return values;
}

}  // namespace

ParamVector::ParamVector(Vector values) : values_(checked(std::move(values))) {}

ParamVector::ParamVector(std::initializer_list<double> values)
    : ParamVector([&] {
        Vector v(static_cast<Eigen::Index>(values.size()));
        Eigen::Index i = 0;
        for (double x : values) v[i++] = x;
        return v;
      }()) {}

ParamVector ParamVector::zeros(std::size_t dim) {
  return ParamVector(Vector::Zero(static_cast<Eigen::Index>(dim)));
}

void require_same_dim(std::size_t a, std::size_t b, const char* context) {
  if (a != b) {
    throw DimensionError(std::string(context) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double dot(const Vector& a, const Vector& b) {
  require_same_dim(static_cast<std::size_t>(a.size()),
                   static_cast<std::size_t>(b.size()), "dot");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double dot(const ParamVector& a, const ParamVector& b) {
  return dot(a.values(), b.values());
}

}  // namespace pnm
