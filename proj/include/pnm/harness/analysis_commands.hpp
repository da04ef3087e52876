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

#ifndef PNM_HARNESS_ANALYSIS_COMMANDS_HPP
#define PNM_HARNESS_ANALYSIS_COMMANDS_HPP

#include <filesystem>

#include "pnm/harness/config.hpp"
#include "pnm/harness/json_util.hpp"

namespace pnm::harness {

// Each command computes its report from the config, writes its files under
// `dir` and returns the JSON summary it wrote. Random streams derive from
// config.seeds.front().

/// Stationary covariance of SGD, heavy ball and PNM (one per beta0) on a
/// random SPD quadratic, with Lyapunov residuals and closed-form predictions.
/// PNM runs scale the momentum pair by posterior.lr, so every optimizer takes
/// the same raw step.
Json posterior_command(const ExperimentConfig& config, const std::filesystem::path& dir);

/// gamma grid table (gamma, kl, kl_grad, bound) plus the critical ratio.
Json pacbayes_command(const ExperimentConfig& config, const std::filesystem::path& dir);

/// Pure-noise momentum variances and, optionally, the minibatch covariance
/// versus Hessian study on synthetic least squares.
Json noise_command(const ExperimentConfig& config, const std::filesystem::path& dir);

/// Min squared gradient norm versus horizon on config.problem (quadratic or
/// rosenbrock), fitted slope and the bound with measured constants.
Json convergence_command(const ExperimentConfig& config, const std::filesystem::path& dir);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_ANALYSIS_COMMANDS_HPP
