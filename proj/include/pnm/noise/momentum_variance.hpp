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

#ifndef PNM_NOISE_MOMENTUM_VARIANCE_HPP
#define PNM_NOISE_MOMENTUM_VARIANCE_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "pnm/core/rng.hpp"

namespace pnm::noise {

struct VarianceReport {
  double variance = 0.0;
  std::size_t sample_count = 0;
  double standard_error = 0.0;
};

enum class MomentumKind { kHeavyBall, kPnm };

/// Long-run statistics of the update direction under pure noise (true
/// gradient zero, i.i.d. N(0, sigma2) draws), before learning-rate scaling.
struct MomentumNoiseReport {
  MomentumKind kind = MomentumKind::kPnm;
  double beta1 = 0.0;
  double beta0 = 0.0;
  double sigma2 = 0.0;
  std::size_t burn_in = 0;
  /// Heavy ball (beta3 = 1 - beta1): m_t. PNM: (1+beta0) m_t - beta0 m_{t-1}.
  VarianceReport direction;
  /// One momentum buffer m_t.
  VarianceReport buffer;
  double ratio = 0.0;
  double ratio_standard_error = 0.0;
  /// Sample correlation of m_t and m_{t-1}; PNM's two buffers share no draws.
  double lag_one_correlation = 0.0;
  std::optional<std::string> warning;
};

/// Runs the actual optimizer recursion on a 1-D pure-noise oracle. Burn-in is
/// 100 / (1 - beta1^2) steps; `steps` retained samples follow (at least 1e4).
/// Standard errors come from 100 contiguous batch means.
MomentumNoiseReport stationary_momentum_variance(MomentumKind kind, double beta1, double beta0,
                                                 double sigma2, std::size_t steps,
                                                 RngStream& rng);

}  // namespace pnm::noise

#endif  // PNM_NOISE_MOMENTUM_VARIANCE_HPP
