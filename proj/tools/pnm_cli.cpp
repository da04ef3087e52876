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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pnm/core/error.hpp"
#include "pnm/harness/analysis_commands.hpp"
#include "pnm/harness/config.hpp"
#include "pnm/harness/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> threads;
  std::optional<bool> snapshots;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config_path, "JSON experiment config (defaults apply when omitted)");
  sub->add_option("--seed", flags.seed, "Run this single seed instead of the config's seed list");
  sub->add_option("--out", flags.out, "Output directory (overrides output_dir)");
  sub->add_option("--threads", flags.threads, "Concurrent jobs")->check(CLI::PositiveNumber);
  sub->add_option("--snapshots", flags.snapshots, "Write parameter snapshots with each trajectory row");
}

pnm::harness::ExperimentConfig resolve(const CommonFlags& flags) {
  pnm::harness::ExperimentConfig config;
  if (!flags.config_path.empty()) config = pnm::harness::load_config(flags.config_path);
  if (flags.seed) config.seeds = {*flags.seed};
  if (flags.out) config.output_dir = *flags.out;
  if (flags.threads) config.threads = *flags.threads;
  if (flags.snapshots) config.snapshots = *flags.snapshots;
  config.validate();
  return config;
}

void print_summary(const std::string& command, const pnm::harness::Json& summary,
                   const std::filesystem::path& dir) {
  std::cout << command << ": wrote results to " << dir.string() << "\n";
  if (summary.contains("aggregate")) std::cout << summary["aggregate"].dump(2) << "\n";
}

int dispatch(const std::string& command, const pnm::harness::ExperimentConfig& config) {
  using namespace pnm::harness;
  const std::filesystem::path dir(config.output_dir);
  ensure_directory(dir);
  const std::string digest = config_digest(config);

  if (command == "run") {
    TrainingOptions options;
    options.snapshots = config.snapshots;
    const RunSet set = run_experiment(config, options);
    write_run_outputs(config, set, dir);
    print_summary(command, set.summary(config), dir);
  } else if (command == "sweep-beta0") {
    const SweepResult sweep = beta0_sweep(config, config.sweep.beta0);
    write_csv(dir / "sweep_beta0.csv", sweep.table(), Provenance{digest, std::nullopt});
    Json summary = {{"config", to_json(config)},
                    {"provenance", Provenance{digest, std::nullopt}.to_json()},
                    {"sweep", sweep.to_json()}};
    write_json(dir / "sweep_beta0_summary.json", summary);
    print_summary(command, summary, dir);
  } else if (command == "label-noise") {
    const LabelNoiseReport report = label_noise_experiment(config);
    RunSet main{digest, report.main_runs};
    RunSet baseline{digest, report.baseline_runs};
    write_run_outputs(config, main, dir, "main_" + report.main_name);
    write_run_outputs(config, baseline, dir, "baseline_" + report.baseline_name);
    const Json summary = report.to_json(config);
    write_json(dir / "label_noise_summary.json", summary);
    std::cout << command << ": " << report.main_name << " beat " << report.baseline_name
              << " on clean test error in " << report.main_wins << "/" << report.main_runs.size()
              << " seeds\n";
  } else if (command == "grid") {
    const GridResult grid = lr_wd_grid(config, config.grid.lr, config.grid.weight_decay);
    write_csv(dir / "grid.csv", grid.matrix(), Provenance{digest, std::nullopt});
    Json summary = {{"config", to_json(config)},
                    {"provenance", Provenance{digest, std::nullopt}.to_json()},
                    {"grid", grid.to_json()}};
    write_json(dir / "grid_summary.json", summary);
    print_summary(command, summary, dir);
  } else if (command == "posterior") {
    print_summary(command, posterior_command(config, dir), dir);
  } else if (command == "pacbayes") {
    print_summary(command, pacbayes_command(config, dir), dir);
  } else if (command == "noise") {
    print_summary(command, noise_command(config, dir), dir);
  } else if (command == "convergence") {
    print_summary(command, convergence_command(config, dir), dir);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive-negative momentum experiments"};
  app.require_subcommand(1);
  CommonFlags flags;
  const char* commands[][2] = {
      {"run", "Train one configuration over its seeds"},
      {"sweep-beta0", "Train across a grid of beta0 values"},
      {"label-noise", "Compare two optimizers under label noise"},
      {"grid", "Learning-rate x weight-decay grid"},
      {"posterior", "Stationary covariance near a quadratic minimum"},
      {"pacbayes", "KL and PAC-Bayes bound over a gamma grid"},
      {"noise", "Momentum noise variance and minibatch covariance"},
      {"convergence", "Gradient-norm decay versus horizon"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c[0], c[1]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, resolve(flags));
  } catch (const pnm::NumericalError& e) {
    std::cerr << "numerical divergence: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const pnm::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const pnm::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
