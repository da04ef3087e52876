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

#ifndef PNM_HARNESS_EXPERIMENTS_HPP
#define PNM_HARNESS_EXPERIMENTS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pnm/harness/config.hpp"
#include "pnm/harness/output.hpp"
#include "pnm/harness/stats.hpp"
#include "pnm/harness/training.hpp"

namespace pnm::harness {

/// Final test error when the problem has one, otherwise final loss.
double headline_metric(const RunResult& run);

struct RunSet {
  std::string digest;
  std::vector<RunResult> runs;  // in config seed order

  /// Config, per-seed results and mean +- population std of each metric.
  Json summary(const ExperimentConfig& config) const;
};

/// One run per seed (concurrently up to config.threads).
RunSet run_experiment(const ExperimentConfig& config, const TrainingOptions& options = {});

/// Per-run CSV trajectories (and snapshots), summary.json and timing.json.
void write_run_outputs(const ExperimentConfig& config, const RunSet& set,
                       const std::filesystem::path& dir, const std::string& stem = "run");

struct SweepRow {
  double beta0 = 0.0;
  bool diverged = false;
  std::vector<double> per_seed;  // headline metric; +inf for a diverged seed
  std::optional<Summary> metric;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Set when the grid holds both a beta0 > 0 and a beta0 in [-1, 0].
  bool comparable = false;
  /// Seeds where the best beta0 > 0 entry is <= / < the best beta0 in [-1, 0].
  std::size_t positive_not_worse = 0;
  std::size_t positive_strictly_better = 0;
  std::size_t seeds = 0;

  Json to_json() const;
  CsvTable table() const;
};

/// Replaces the optimizer's beta0 (PNM or AdaPNM) by each grid value.
SweepResult beta0_sweep(const ExperimentConfig& base, const std::vector<double>& grid);

struct LabelNoiseReport {
  std::string main_name;
  std::string baseline_name;
  std::vector<RunResult> main_runs;
  std::vector<RunResult> baseline_runs;
  bool no_corruption = false;
  /// Seeds where the main optimizer's final clean test error is strictly lower.
  std::size_t main_wins = 0;

  Json to_json(const ExperimentConfig& config) const;
};

/// Trains config.optimizer and config.label_noise.baseline on the same
/// corrupted training split and seeds; test labels stay clean.
LabelNoiseReport label_noise_experiment(const ExperimentConfig& config);

struct GridCell {
  double lr = 0.0;
  double weight_decay = 0.0;
  bool diverged = false;
  std::optional<Summary> metric;
};

struct GridResult {
  std::vector<double> lrs;
  std::vector<double> weight_decays;
  std::vector<GridCell> cells;  // row-major: lr outer, weight decay inner

  const GridCell& at(std::size_t i, std::size_t j) const { return cells[i * weight_decays.size() + j]; }
  /// Smallest mean metric over non-diverged cells.
  std::optional<double> best() const;
  Json to_json() const;
  /// Rows are learning rates, columns weight decays; diverged cells read "diverged".
  CsvTable matrix() const;
};

/// Full factorial; a cell is diverged when any of its seeds diverges.
GridResult lr_wd_grid(const ExperimentConfig& base, const std::vector<double>& lrs,
                      const std::vector<double>& weight_decays);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_EXPERIMENTS_HPP
