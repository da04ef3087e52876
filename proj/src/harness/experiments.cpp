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

#include "pnm/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pnm/core/error.hpp"
#include "pnm/core/parallel.hpp"

namespace pnm::harness {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json summary_json(const Summary& s) {
  return {{"mean", s.mean}, {"std", s.std}, {"count", s.count}};
}

// Runs every (variant, seed) pair; a diverged job yields std::nullopt.
std::vector<std::optional<RunResult>> run_jobs(const ExperimentConfig& config,
                                               const std::vector<optim::OptimizerSpec>& variants,
                                               const TrainingProblem& problem,
                                               const std::string& digest,
                                               const TrainingOptions& options) {
  const std::size_t seeds = config.seeds.size();
  std::vector<std::optional<RunResult>> out(variants.size() * seeds);
  parallel_for(out.size(), config.threads, [&](std::size_t job) {
    try {
      out[job] = train(config, variants[job / seeds], problem, config.seeds[job % seeds], digest, options);
    } catch (const NumericalError&) {
      out[job] = std::nullopt;
    }
  });
  return out;
}

optim::OptimizerSpec with_beta0(optim::OptimizerSpec spec, double beta0) {
  if (auto* p = std::get_if<optim::PnmConfig>(&spec)) {
    p->beta0 = beta0;
  } else if (auto* a = std::get_if<optim::AdaPnmConfig>(&spec)) {
    a->beta0 = beta0;
  } else {
    throw ConfigError("the beta0 sweep needs a pnm or adapnm optimizer");
  }
  optim::validate(spec);
  return spec;
}

}  // namespace

double headline_metric(const RunResult& run) {
  return run.final_test_error ? *run.final_test_error : run.final_loss;
}

Json RunSet::summary(const ExperimentConfig& config) const {
  Json per_seed = Json::array();
  std::vector<double> loss, grad, test, best;
  for (const auto& r : runs) {
    per_seed.push_back(r.to_json());
    loss.push_back(r.final_loss);
    grad.push_back(r.min_grad_norm_sq);
    if (r.final_test_error) test.push_back(*r.final_test_error);
    if (r.best_test_error) best.push_back(*r.best_test_error);
  }
  Json aggregate = {{"final_loss", summary_json(summarize(loss))},
                    {"min_grad_norm_sq", summary_json(summarize(grad))}};
  if (!test.empty()) aggregate["final_test_error"] = summary_json(summarize(test));
  if (!best.empty()) aggregate["best_test_error"] = summary_json(summarize(best));
  return {{"config", to_json(config)},
          {"provenance", Provenance{digest, std::nullopt}.to_json()},
          {"std_convention", "population (divisor n)"},
          {"runs", per_seed},
          {"aggregate", aggregate}};
}

RunSet run_experiment(const ExperimentConfig& config, const TrainingOptions& options) {
  config.validate();
  const std::string digest = config_digest(config);
  const TrainingProblem problem = build_problem(config.problem, config.batch_size);
  RunSet set;
  set.digest = digest;
  set.runs.resize(config.seeds.size());
  parallel_for(config.seeds.size(), config.threads, [&](std::size_t i) {
    set.runs[i] = train(config, config.optimizer, problem, config.seeds[i], digest, options);
  });
  return set;
}

void write_run_outputs(const ExperimentConfig& config, const RunSet& set,
                       const std::filesystem::path& dir, const std::string& stem) {
  ensure_directory(dir);
  Json timing = Json::array();
  for (const auto& r : set.runs) {
    const Provenance prov{set.digest, r.seed};
    const std::string name = stem + "_seed" + std::to_string(r.seed);
    write_csv(dir / (name + ".csv"), trajectory_table(r.trajectory, r.extra_names, r.extra_columns), prov);
    if (config.snapshots) write_csv(dir / (name + "_snapshots.csv"), snapshot_table(r.trajectory), prov);
    timing.push_back({{"seed", r.seed}, {"wall_clock_seconds", r.wall_clock_seconds}});
  }
  write_json(dir / (stem + "_summary.json"), set.summary(config));
  write_json(dir / (stem + "_timing.json"),
             {{"provenance", Provenance{set.digest, std::nullopt}.to_json()}, {"runs", timing}});
}

Json SweepResult::to_json() const {
  Json rows_json = Json::array();
  for (const auto& r : rows) {
    Json row = {{"beta0", r.beta0}, {"diverged", r.diverged}};
    Json seeds_json = Json::array();
    for (double v : r.per_seed) seeds_json.push_back(std::isfinite(v) ? Json(v) : Json("diverged"));
    row["per_seed"] = seeds_json;
    if (r.metric) row["metric"] = summary_json(*r.metric);
    rows_json.push_back(row);
  }
  Json j = {{"rows", rows_json}, {"comparable", comparable}, {"seeds", seeds}};
  if (comparable) {
    j["positive_not_worse_seeds"] = positive_not_worse;
    j["positive_strictly_better_seeds"] = positive_strictly_better;
  }
  return j;
}

CsvTable SweepResult::table() const {
  CsvTable t;
  t.header = {"beta0", "mean_metric", "std_metric", "diverged"};
  for (const auto& r : rows) {
    t.add_row({format_number(r.beta0), r.metric ? format_number(r.metric->mean) : "",
               r.metric ? format_number(r.metric->std) : "", r.diverged ? "1" : "0"});
  }
  return t;
}

SweepResult beta0_sweep(const ExperimentConfig& base, const std::vector<double>& grid) {
  base.validate();
  if (grid.empty()) throw ConfigError("beta0 grid must not be empty");
  std::vector<optim::OptimizerSpec> variants;
  for (double b : grid) variants.push_back(with_beta0(base.optimizer, b));
  const std::string digest = config_digest(base);
  const TrainingProblem problem = build_problem(base.problem, base.batch_size);
  const auto jobs = run_jobs(base, variants, problem, digest, {});

  const std::size_t seeds = base.seeds.size();
  SweepResult result;
  result.seeds = seeds;
  for (std::size_t v = 0; v < grid.size(); ++v) {
    SweepRow row;
    row.beta0 = grid[v];
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto& job = jobs[v * seeds + s];
      row.per_seed.push_back(job ? headline_metric(*job) : kInf);
      row.diverged = row.diverged || !job;
    }
    if (!row.diverged) row.metric = summarize(row.per_seed);
    result.rows.push_back(std::move(row));
  }

  bool has_pos = false, has_nonpos = false;
  for (double b : grid) {
    has_pos = has_pos || b > 0.0;
    has_nonpos = has_nonpos || (b >= -1.0 && b <= 0.0);
  }
  result.comparable = has_pos && has_nonpos;
  if (result.comparable) {
    for (std::size_t s = 0; s < seeds; ++s) {
      double best_pos = kInf, best_nonpos = kInf;
      for (const auto& row : result.rows) {
        double& slot = row.beta0 > 0.0 ? best_pos : best_nonpos;
        slot = std::min(slot, row.per_seed[s]);
      }
      if (best_pos <= best_nonpos) ++result.positive_not_worse;
      if (best_pos < best_nonpos) ++result.positive_strictly_better;
    }
  }
  return result;
}

Json LabelNoiseReport::to_json(const ExperimentConfig& config) const {
  auto side = [](const std::vector<RunResult>& runs) {
    Json per_seed = Json::array();
    std::vector<double> test, noisy, clean, flipped;
    for (const auto& r : runs) {
      per_seed.push_back(r.to_json());
      if (r.final_test_error) test.push_back(*r.final_test_error);
      noisy.push_back(r.extra_columns[0].back());
      clean.push_back(r.extra_columns[1].back());
      flipped.push_back(r.extra_columns[2].back());
    }
    Json j = {{"runs", per_seed},
              {"final_train_error_noisy", summary_json(summarize(noisy))},
              {"final_train_error_clean_subset", summary_json(summarize(clean))},
              {"final_train_error_flipped", summary_json(summarize(flipped))}};
    if (!test.empty()) j["final_test_error"] = summary_json(summarize(test));
    return j;
  };
  return {{"config", harness::to_json(config)},
          {"provenance", Provenance{config_digest(config), std::nullopt}.to_json()},
          {"no_corruption", no_corruption},
          {"main", {{"optimizer", main_name}, {"results", side(main_runs)}}},
          {"baseline", {{"optimizer", baseline_name}, {"results", side(baseline_runs)}}},
          {"main_wins", main_wins},
          {"seeds", main_runs.size()}};
}

LabelNoiseReport label_noise_experiment(const ExperimentConfig& config) {
  config.validate();
  if (!config.problem.uses_dataset() || config.problem.name == "least_squares") {
    throw ConfigError("label-noise experiments need a classification problem");
  }
  if (config.problem.dataset.test_fraction <= 0.0) {
    throw ConfigError("label-noise experiments need a clean test split (test_fraction > 0)");
  }
  const std::string digest = config_digest(config);
  const TrainingProblem problem = build_problem(config.problem, config.batch_size);
  const std::vector<optim::OptimizerSpec> variants{config.optimizer, config.label_noise.baseline};
  TrainingOptions options;
  options.label_noise_metrics = true;
  const std::size_t seeds = config.seeds.size();
  std::vector<RunResult> runs(2 * seeds);
  parallel_for(runs.size(), config.threads, [&](std::size_t job) {
    runs[job] = train(config, variants[job / seeds], problem, config.seeds[job % seeds], digest, options);
  });

  LabelNoiseReport report;
  report.main_name = optim::optimizer_name(config.optimizer);
  report.baseline_name = optim::optimizer_name(config.label_noise.baseline);
  report.main_runs.assign(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(seeds));
  report.baseline_runs.assign(runs.begin() + static_cast<std::ptrdiff_t>(seeds), runs.end());
  report.no_corruption = config.problem.dataset.label_noise.rate == 0.0;
  for (std::size_t s = 0; s < seeds; ++s) {
    if (*report.main_runs[s].final_test_error < *report.baseline_runs[s].final_test_error) {
      ++report.main_wins;
    }
  }
  return report;
}

std::optional<double> GridResult::best() const {
  std::optional<double> out;
  for (const auto& c : cells) {
    if (c.diverged || !c.metric) continue;
    if (!out || c.metric->mean < *out) out = c.metric->mean;
  }
  return out;
}

Json GridResult::to_json() const {
  Json cells_json = Json::array();
  for (const auto& c : cells) {
    Json j = {{"lr", c.lr}, {"weight_decay", c.weight_decay}, {"diverged", c.diverged}};
    if (c.metric) j["metric"] = summary_json(*c.metric);
    cells_json.push_back(j);
  }
  Json j = {{"lr", lrs}, {"weight_decay", weight_decays}, {"cells", cells_json}};
  if (auto b = best()) j["best"] = *b;
  return j;
}

CsvTable GridResult::matrix() const {
  CsvTable t;
  t.header = {"lr"};
  for (double wd : weight_decays) t.header.push_back("wd_" + format_number(wd));
  for (std::size_t i = 0; i < lrs.size(); ++i) {
    std::vector<std::string> row{format_number(lrs[i])};
    for (std::size_t j = 0; j < weight_decays.size(); ++j) {
      const auto& c = at(i, j);
      row.push_back(c.diverged ? "diverged" : format_number(c.metric->mean));
    }
    t.add_row(std::move(row));
  }
  return t;
}

GridResult lr_wd_grid(const ExperimentConfig& base, const std::vector<double>& lrs,
                      const std::vector<double>& weight_decays) {
  base.validate();
  if (lrs.empty() || weight_decays.empty()) throw ConfigError("grid axes must be non-empty");
  std::vector<optim::OptimizerSpec> variants;
  for (double lr : lrs) {
    for (double wd : weight_decays) {
      optim::WeightDecaySpec spec{wd > 0.0 ? base.grid.mode : optim::WeightDecayMode::kNone, wd};
      auto v = optim::with_weight_decay(optim::with_learning_rate(base.optimizer, lr), spec);
      optim::validate(v);
      variants.push_back(v);
    }
  }
  const std::string digest = config_digest(base);
  const TrainingProblem problem = build_problem(base.problem, base.batch_size);
  const auto jobs = run_jobs(base, variants, problem, digest, {});

  GridResult result;
  result.lrs = lrs;
  result.weight_decays = weight_decays;
  const std::size_t seeds = base.seeds.size();
  for (std::size_t v = 0; v < variants.size(); ++v) {
    GridCell cell;
    cell.lr = lrs[v / weight_decays.size()];
    cell.weight_decay = weight_decays[v % weight_decays.size()];
    std::vector<double> values;
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto& job = jobs[v * seeds + s];
      if (!job) {
        cell.diverged = true;
        continue;
      }
      const double m = headline_metric(*job);
      if (!std::isfinite(m)) cell.diverged = true;
      values.push_back(m);
    }
    if (!cell.diverged) cell.metric = summarize(values);
    result.cells.push_back(cell);
  }
  return result;
}

}  // namespace pnm::harness
