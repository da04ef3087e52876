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

#ifndef PNM_POSTERIOR_LYAPUNOV_HPP
#define PNM_POSTERIOR_LYAPUNOV_HPP

#include <cstddef>
#include <string>

#include "pnm/core/param_vector.hpp"

namespace pnm::posterior {

/// ||S H + H S - D||_F / ||D||_F with D the scaled noise covariance lr * C.
/// Returns 0 when both D and the left side vanish; throws on asymmetric
/// S or H and on mismatched shapes.
double lyapunov_residual(const Matrix& sigma, const Matrix& hessian, const Matrix& scaled_noise);

enum class PosteriorKind { kSgd, kHb, kPnm };

std::string to_string(PosteriorKind kind);
PosteriorKind parse_posterior_kind(const std::string& name);

/// Scalar s with predicted stationary covariance s * I when C = H / B:
/// lr / (2B) for SGD and heavy ball, ((1+beta0)^2 + beta0^2) lr / (2B) for PNM.
double theoretical_posterior_covariance(PosteriorKind kind, double lr, std::size_t batch,
                                        double beta0 = 0.0);

}  // namespace pnm::posterior

#endif  // PNM_POSTERIOR_LYAPUNOV_HPP
