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

#include "pnm/noise/amplification.hpp"

#include <cmath>

#include "pnm/core/error.hpp"

namespace pnm::noise {

double amplification_factor(double beta0) {
  return (1.0 + beta0) * (1.0 + beta0) + beta0 * beta0;
}

double momentum_noise_variance(double beta1, double beta3, double sigma2, std::int64_t t) {
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("beta1 must lie in [0, 1)");
  if (t < 0) throw ConfigError("step index must be >= 0");
  const double b2 = beta1 * beta1;
  return beta3 * beta3 * (1.0 - std::pow(b2, static_cast<double>(t + 1))) / (1.0 - b2) * sigma2;
}

double momentum_noise_variance(double beta1, double beta3, double sigma2) {
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("beta1 must lie in [0, 1)");
  return beta3 * beta3 / (1.0 - beta1 * beta1) * sigma2;
}

double pnm_buffer_variance(double beta1, double sigma2) {
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("beta1 must lie in [0, 1)");
  const double b2 = beta1 * beta1;
  return (1.0 - b2) / (1.0 + b2) * sigma2;
}

}  // namespace pnm::noise
