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

#ifndef PNM_PROBLEMS_GRADIENT_CHECK_HPP
#define PNM_PROBLEMS_GRADIENT_CHECK_HPP

#include <functional>

#include "pnm/core/oracle.hpp"

namespace pnm::problems {

using LossFunction = std::function<double(const Vector&)>;

/// Central differences (f(theta + h e_i) - f(theta - h e_i)) / 2h.
Vector central_difference_gradient(const LossFunction& loss, const Vector& theta, double h);

/// Worst per-coordinate relative error of `analytic` against central
/// differences. The denominator is max(|fd_i|, 1e-3 ||fd||_inf, 1e-12), so
/// coordinates that are tiny relative to the rest of the gradient are judged
/// on an absolute scale.
double fd_gradient_check(const LossFunction& loss, const Vector& analytic,
                         const Vector& theta, double h);

/// Same check against oracle.full(). The oracle must report a loss.
double fd_gradient_check(const GradientOracle& oracle, const Vector& theta, double h);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_GRADIENT_CHECK_HPP
