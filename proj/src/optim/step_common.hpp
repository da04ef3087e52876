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

#ifndef PNM_SRC_OPTIM_STEP_COMMON_HPP
#define PNM_SRC_OPTIM_STEP_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "pnm/core/error.hpp"
#include "pnm/core/param_vector.hpp"
#include "pnm/optim/weight_decay.hpp"

namespace pnm::optim::detail {

// Copies the raw gradient into `effective`, rejecting bad shapes and
// non-finite entries, then folds in L2 decay.
inline void prepare_gradient(const ParamVector& theta, const GradientSample& g,
                             const WeightDecaySpec& wd, std::int64_t step,
                             Vector& effective) {
  require_same_dim(theta.size(), static_cast<std::size_t>(g.gradient.size()),
                   "optimizer step");
  for (Eigen::Index i = 0; i < g.gradient.size(); ++i) {
    if (!std::isfinite(g.gradient[i])) {
      throw NumericalError("non-finite gradient entry at index " + std::to_string(i), step);
    }
  }
  effective = g.gradient;
  decay_gradient(wd, theta.values(), effective);
}

inline void require_state_dim(std::size_t state_dim, const ParamVector& theta) {
  require_same_dim(state_dim, theta.size(), "optimizer state");
}

inline void require_lr(double lr) {
  if (!(lr > 0.0) || !std::isfinite(lr)) {
    throw ConfigError("learning rate must be finite and > 0, got " + std::to_string(lr));
  }
}

inline void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value < 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1), got " + std::to_string(value));
  }
}

}  // namespace pnm::optim::detail

#endif  // PNM_SRC_OPTIM_STEP_COMMON_HPP
