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

#ifndef PNM_OPTIM_OPTIMIZER_HPP
#define PNM_OPTIM_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "pnm/core/param_vector.hpp"
#include "pnm/optim/adam.hpp"
#include "pnm/optim/adapnm.hpp"
#include "pnm/optim/heavy_ball.hpp"
#include "pnm/optim/pnm.hpp"

namespace pnm::optim {

using OptimizerSpec = std::variant<HbConfig, PnmConfig, AdaPnmConfig, AdamConfig>;

/// Runtime-polymorphic wrapper owning one optimizer state.
class Optimizer {
 public:
  virtual ~Optimizer() = default;

  virtual void step(ParamVector& theta, const GradientSample& g) = 0;
  virtual double learning_rate() const = 0;
  virtual void set_learning_rate(double lr) = 0;
  virtual std::int64_t steps_taken() const = 0;
  virtual std::string name() const = 0;
};

std::unique_ptr<Optimizer> make_optimizer(const OptimizerSpec& spec, std::size_t dim);

void validate(const OptimizerSpec& spec);
double learning_rate(const OptimizerSpec& spec);
OptimizerSpec with_learning_rate(OptimizerSpec spec, double lr);
const WeightDecaySpec& weight_decay(const OptimizerSpec& spec);
OptimizerSpec with_weight_decay(OptimizerSpec spec, WeightDecaySpec wd);

/// "sgd", "hb", "pnm", "adapnm", "adam" or "amsgrad".
std::string optimizer_name(const OptimizerSpec& spec);

}  // namespace pnm::optim

#endif  // PNM_OPTIM_OPTIMIZER_HPP
