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

#ifndef PNM_HARNESS_TRAINING_HPP
#define PNM_HARNESS_TRAINING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pnm/core/oracle.hpp"
#include "pnm/core/trajectory.hpp"
#include "pnm/harness/config.hpp"
#include "pnm/problems/dataset_problems.hpp"

namespace pnm::harness {

/// A ready-to-train problem instance.
struct TrainingProblem {
  std::shared_ptr<const GradientOracle> oracle;
  /// Set for dataset problems.
  std::shared_ptr<const problems::DatasetProblem> model;
  std::shared_ptr<const problems::FiniteDataset> train;
  std::optional<problems::FiniteDataset> test;
  /// Per training row: was the label corrupted.
  std::vector<bool> flipped;
  bool classification = false;

  /// Misclassification rate on `rows` of `data` (classification only).
  double error(const Vector& theta, const problems::FiniteDataset& data,
               const std::vector<std::size_t>& rows) const;
  double error(const Vector& theta, const problems::FiniteDataset& data) const;
};

/// Builds the instance from spec.data_seed; independent of any run seed.
TrainingProblem build_problem(const ProblemSpec& spec, std::size_t batch_size);

/// Starting point for one run. Dataset problems other than the MLP start at 0.
Vector initial_point(const ProblemSpec& spec, const TrainingProblem& problem, std::uint64_t seed);

struct RunResult {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string optimizer;
  double final_loss = 0.0;
  std::optional<double> final_test_error;
  std::optional<double> best_test_error;
  double min_grad_norm_sq = 0.0;
  double wall_clock_seconds = 0.0;
  Trajectory trajectory{0, ""};
  /// Extra per-record columns (label-noise metrics).
  std::vector<std::string> extra_names;
  std::vector<std::vector<double>> extra_columns;

  /// Every numeric field except wall-clock, plus the PRNG identifier.
  Json to_json() const;
};

struct TrainingOptions {
  bool snapshots = false;
  /// Record train error on corrupted labels, on the clean subset and on the
  /// flipped subset at every trajectory row.
  bool label_noise_metrics = false;
};

/// Trains one seed. Throws NumericalError naming the step on non-finite
/// values or ||theta|| > 1e6 * max(1, ||theta_0||).
RunResult train(const ExperimentConfig& config, const optim::OptimizerSpec& optimizer,
                const TrainingProblem& problem, std::uint64_t seed, const std::string& digest,
                const TrainingOptions& options = {});

}  // namespace pnm::harness

#endif  // PNM_HARNESS_TRAINING_HPP
