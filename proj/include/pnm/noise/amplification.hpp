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

#ifndef PNM_NOISE_AMPLIFICATION_HPP
#define PNM_NOISE_AMPLIFICATION_HPP

#include <cstdint>

namespace pnm::noise {

/// (1 + beta0)^2 + beta0^2: variance of the positive-negative pair relative
/// to one buffer when the two buffers are independent. Minimum 1/2 at
/// beta0 = -1/2; equals 5 at beta0 = 1.
double amplification_factor(double beta0);

/// Variance of the heavy-ball momentum noise sum_k beta3 beta1^(t-k) xi_k
/// after t+1 i.i.d. terms of variance sigma2:
/// beta3^2 (1 - beta1^(2(t+1))) / (1 - beta1^2) sigma2.
double momentum_noise_variance(double beta1, double beta3, double sigma2, std::int64_t t);
/// t -> infinity limit of the above.
double momentum_noise_variance(double beta1, double beta3, double sigma2);

/// Stationary variance of one PNM buffer m = beta1^2 m + (1 - beta1^2) xi:
/// (1 - beta1^2) / (1 + beta1^2) sigma2.
double pnm_buffer_variance(double beta1, double sigma2);

}  // namespace pnm::noise

#endif  // PNM_NOISE_AMPLIFICATION_HPP
