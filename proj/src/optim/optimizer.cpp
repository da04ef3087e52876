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

#include "pnm/optim/optimizer.hpp"

#include <type_traits>

namespace pnm::optim {
namespace {

template <typename Config, typename State, auto StepFn>
class Wrapped final : public Optimizer {
 public:
  Wrapped(Config config, std::size_t dim) : config_(config), state_(dim) {
    config_.validate();
  }

  void step(ParamVector& theta, const GradientSample& g) override {
    StepFn(state_, config_, theta, g);
  }
  double learning_rate() const override { return config_.lr; }
  void set_learning_rate(double lr) override {
    Config next = config_;
    next.lr = lr;
    next.validate();
    config_ = next;
  }
  std::int64_t steps_taken() const override { return state_.t; }
  std::string name() const override { return optimizer_name(config_); }

 private:
  Config config_;
  State state_;
};

using HbOptimizer = Wrapped<HbConfig, HbState, hb_step>;
using PnmOptimizer = Wrapped<PnmConfig, PnmState, pnm_step>;
using AdaPnmOptimizer = Wrapped<AdaPnmConfig, AdaPnmState, adapnm_step>;
using AdamOptimizer = Wrapped<AdamConfig, AdamState, adam_step>;

}  // namespace

std::unique_ptr<Optimizer> make_optimizer(const OptimizerSpec& spec, std::size_t dim) {
  return std::visit(
      [dim](const auto& config) -> std::unique_ptr<Optimizer> {
        using T = std::decay_t<decltype(config)>;
        if constexpr (std::is_same_v<T, HbConfig>) {
          return std::make_unique<HbOptimizer>(config, dim);
        } else if constexpr (std::is_same_v<T, PnmConfig>) {
          return std::make_unique<PnmOptimizer>(config, dim);
        } else if constexpr (std::is_same_v<T, AdaPnmConfig>) {
          return std::make_unique<AdaPnmOptimizer>(config, dim);
        } else {
          return std::make_unique<AdamOptimizer>(config, dim);
        }
      },
      spec);
}

void validate(const OptimizerSpec& spec) {
  std::visit([](const auto& c) { c.validate(); }, spec);
}

double learning_rate(const OptimizerSpec& spec) {
  return std::visit([](const auto& c) { return c.lr; }, spec);
}

OptimizerSpec with_learning_rate(OptimizerSpec spec, double lr) {
  std::visit([lr](auto& c) { c.lr = lr; }, spec);
  return spec;
}

const WeightDecaySpec& weight_decay(const OptimizerSpec& spec) {
  return std::visit([](const auto& c) -> const WeightDecaySpec& { return c.weight_decay; },
                    spec);
}

OptimizerSpec with_weight_decay(OptimizerSpec spec, WeightDecaySpec wd) {
  std::visit([&wd](auto& c) { c.weight_decay = wd; }, spec);
  return spec;
}

std::string optimizer_name(const OptimizerSpec& spec) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, HbConfig>) {
          return (c.beta1 == 0.0 && c.beta3 == 1.0) ? "sgd" : "hb";
        } else if constexpr (std::is_same_v<T, PnmConfig>) {
          return "pnm";
        } else if constexpr (std::is_same_v<T, AdaPnmConfig>) {
          return "adapnm";
        } else {
          return c.amsgrad ? "amsgrad" : "adam";
        }
      },
      spec);
}

}  // namespace pnm::optim
