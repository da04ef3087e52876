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

#ifndef PNM_HARNESS_CONFIG_HPP
#define PNM_HARNESS_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnm/harness/json_util.hpp"
#include "pnm/optim/optimizer.hpp"
#include "pnm/problems/label_noise.hpp"

namespace pnm::harness {

struct QuadraticProblemSpec {
  std::size_t dim = 10;
  double eig_min = 0.1;
  double eig_max = 1.0;
  /// Isotropic additive gradient noise; 0 gives a deterministic problem.
  double noise_variance = 0.0;
  /// ||theta_0 - theta*||; the direction is random.
  double initial_distance = 1.0;
};

struct RosenbrockProblemSpec {
  double x0 = -1.2;
  double y0 = 1.0;
  /// Uniform noise on [-a, a] per coordinate; 0 gives a deterministic problem.
  double noise_half_width = 0.0;
};

struct DatasetSpec {
  /// "two_moons", "linear" (synthetic regression) or "csv".
  std::string source = "two_moons";
  std::size_t samples = 2000;
  double noise = 0.2;
  std::string path;
  /// Regression features for "linear"; column j is scaled by 1 + j * scale_step.
  std::size_t features = 10;
  double scale_step = 0.5;
  /// Fraction held out as a clean test split.
  double test_fraction = 0.5;
  problems::LabelNoiseSpec label_noise;
};

struct ProblemSpec {
  /// "quadratic", "rosenbrock", "least_squares", "logistic" or "mlp".
  std::string name = "mlp";
  QuadraticProblemSpec quadratic;
  RosenbrockProblemSpec rosenbrock;
  DatasetSpec dataset;
  std::size_t hidden = 16;
  /// Seeds the problem instance (data, label corruption, random Hessian).
  /// Run seeds only vary the initialization and the gradient noise.
  std::uint64_t data_seed = 0;

  bool uses_dataset() const;
};

struct LrSchedule {
  std::vector<std::int64_t> milestones;
  double factor = 0.1;

  /// The learning-rate multiplier in effect at `step`.
  double multiplier(std::int64_t step) const;
};

struct SweepSpec {
  std::vector<double> beta0{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
};

struct GridSpec {
  std::vector<double> lr{0.01, 0.1, 1.0};
  std::vector<double> weight_decay{0.0, 1e-4, 1e-3};
  optim::WeightDecayMode mode = optim::WeightDecayMode::kL2;
};

struct LabelNoiseExperimentSpec {
  /// Compared against the main optimizer; heavy ball at lr 0.1 by default.
  optim::OptimizerSpec baseline = optim::HbConfig{0.1, 0.9, 1.0, {}};
};

struct PosteriorSpec {
  std::size_t dim = 5;
  double eig_min = 0.6;
  double eig_max = 1.0;
  double lr = 0.01;
  /// C = H / batch unless noise_variance > 0, which gives C = noise_variance * I.
  std::size_t batch = 1;
  double noise_variance = 0.0;
  std::vector<double> beta0{0.5, 1.0};
  double beta1 = 0.9;
  std::size_t samples = 20000;
  std::size_t thin = 0;
  std::size_t burn_in = 0;
  std::size_t chains = 1;
};

struct PacBayesSpec {
  double lr = 0.001;
  std::size_t batch = 128;
  std::size_t dataset_size = 50000;
  double prior_variance = 1e-4;
  std::size_t dim = 1000;
  double delta = 0.05;
  double mean_norm_sq = 0.0;
  double gamma_min = 1.0;
  /// 0 picks twice the optimal gamma (or 2 when no improvement is predicted).
  double gamma_max = 0.0;
  std::size_t points = 100;
};

struct CovarianceStudySpec {
  std::size_t samples = 2000;
  std::size_t features = 8;
  double scale_step = 0.5;
  std::vector<std::int64_t> batches{32, 16};
  std::size_t draws = 2000;
};

struct NoiseSpec {
  double beta1 = 0.9;
  std::vector<double> beta0{0.5, 1.0, 2.0};
  double variance = 1.0;
  std::size_t steps = 1000000;
  bool covariance = true;
  CovarianceStudySpec covariance_study;
};

struct ConvergenceSpec {
  std::vector<std::int64_t> horizons{100, 1000, 10000};
  std::size_t seeds = 20;
  double step_constant = 1.0;
  /// L for the step rule; 0 takes the largest Hessian eigenvalue at theta_0.
  double smoothness = 0.0;
  double beta0 = 1.0;
  double beta1 = 0.9;
  double loss_lower_bound = 0.0;
  bool track_hessian = false;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ProblemSpec problem;
  optim::OptimizerSpec optimizer = optim::PnmConfig{};
  std::int64_t steps = 1000;
  std::size_t batch_size = 32;
  std::vector<std::uint64_t> seeds{1};
  std::string output_dir = "results";
  bool snapshots = false;
  /// Record a trajectory row every `eval_every` steps (0: first and last only).
  std::int64_t eval_every = 100;
  LrSchedule lr_schedule;
  std::size_t threads = 1;

  SweepSpec sweep;
  GridSpec grid;
  LabelNoiseExperimentSpec label_noise;
  PosteriorSpec posterior;
  PacBayesSpec pacbayes;
  NoiseSpec noise;
  ConvergenceSpec convergence;

  void validate() const;
};

/// Parses and validates; unknown keys anywhere are ConfigErrors.
ExperimentConfig parse_config(const Json& json);
ExperimentConfig load_config(const std::string& path);

optim::OptimizerSpec parse_optimizer(const Json& json, const std::string& path);
Json optimizer_to_json(const optim::OptimizerSpec& spec);

/// Every experiment field with defaults filled in. The execution settings
/// output_dir and threads are left out: they never change a result byte.
Json to_json(const ExperimentConfig& config);
/// FNV-1a 64 of the canonical (sorted-key, compact) dump of to_json.
std::string config_digest(const ExperimentConfig& config);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_CONFIG_HPP
