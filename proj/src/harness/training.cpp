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

#include "pnm/harness/training.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <numeric>

#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/problems/csv.hpp"
#include "pnm/problems/label_noise.hpp"
#include "pnm/problems/noise_oracles.hpp"
#include "pnm/problems/quadratic.hpp"
#include "pnm/problems/rosenbrock.hpp"
#include "pnm/problems/tiny_mlp.hpp"
#include "pnm/problems/two_moons.hpp"

namespace pnm::harness {
namespace {

// Stream ids below a run or problem seed.
constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kLabelStream = 2;
constexpr std::uint64_t kInitStream = 3;
constexpr std::uint64_t kTrainStream = 4;

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

problems::FiniteDataset make_linear(const DatasetSpec& d, RngStream& rng) {
  const auto n = static_cast<Eigen::Index>(d.samples);
  const auto k = static_cast<Eigen::Index>(d.features);
  problems::FiniteDataset data;
  data.features.resize(n, k);
  Vector w(k);
  rng.fill_normal(w);
  data.labels.resize(d.samples);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      data.features(i, j) = (1.0 + d.scale_step * static_cast<double>(j)) * rng.normal();
    }
    data.labels[static_cast<std::size_t>(i)] = data.features.row(i).dot(w) + d.noise * rng.normal();
  }
  return data;
}

problems::FiniteDataset shuffled(const problems::FiniteDataset& data, RngStream& rng) {
  std::vector<std::size_t> order = all_rows(data.size());
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform_index(i)]);
  }
  return data.subset(order);
}

double logistic_error(const Vector& theta, const problems::FiniteDataset& data,
                      const std::vector<std::size_t>& rows) {
  const auto d = static_cast<Eigen::Index>(data.feature_dim());
  std::size_t wrong = 0;
  for (auto r : rows) {
    const double z = data.features.row(static_cast<Eigen::Index>(r)).dot(theta.head(d)) + theta[d];
    const int predicted = z > 0.0 ? 1 : 0;
    if (predicted != data.label_class(r)) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(rows.size());
}

}  // namespace

double TrainingProblem::error(const Vector& theta, const problems::FiniteDataset& data,
                              const std::vector<std::size_t>& rows) const {
  if (!classification || !model) throw ConfigError("error rate requested for a non-classification problem");
  if (rows.empty()) return 0.0;
  if (const auto* mlp = dynamic_cast<const problems::TinyMlp*>(model.get())) {
    return mlp->classification_error(theta, data, rows);
  }
  return logistic_error(theta, data, rows);
}

double TrainingProblem::error(const Vector& theta, const problems::FiniteDataset& data) const {
  return error(theta, data, all_rows(data.size()));
}

TrainingProblem build_problem(const ProblemSpec& spec, std::size_t batch_size) {
  RngStream base(spec.data_seed);
  TrainingProblem out;
  if (spec.name == "quadratic") {
    const auto& q = spec.quadratic;
    RngStream rng = base.derive(kDataStream);
    Vector eig(static_cast<Eigen::Index>(q.dim));
    for (std::size_t i = 0; i < q.dim; ++i) {
      const double frac = q.dim == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(q.dim - 1);
      eig[static_cast<Eigen::Index>(i)] = q.eig_min + frac * (q.eig_max - q.eig_min);
    }
    auto model = std::make_shared<problems::QuadraticModel>(
        problems::QuadraticModel::random_spd(eig, rng, Vector::Zero(eig.size())));
    if (q.noise_variance > 0.0) {
      out.oracle = std::make_shared<problems::AdditiveNoiseOracle>(model, q.noise_variance);
    } else {
      out.oracle = model;
    }
    return out;
  }
  if (spec.name == "rosenbrock") {
    auto model = std::make_shared<problems::Rosenbrock>();
    if (spec.rosenbrock.noise_half_width > 0.0) {
      out.oracle = std::make_shared<problems::BoundedNoiseOracle>(model, spec.rosenbrock.noise_half_width);
    } else {
      out.oracle = model;
    }
    return out;
  }

  const auto& d = spec.dataset;
  const bool classification = spec.name != "least_squares";
  RngStream data_rng = base.derive(kDataStream);
  problems::FiniteDataset all;
  if (d.source == "two_moons") {
    all = problems::make_two_moons(d.samples, d.noise, data_rng);
  } else if (d.source == "linear") {
    all = make_linear(d, data_rng);
  } else {
    all = shuffled(problems::load_csv_dataset(d.path, classification), data_rng);
  }
  all.validate();
  if (spec.name == "logistic" && all.num_classes > 2) {
    throw ConfigError("logistic regression needs binary labels");
  }

  const std::size_t n = all.size();
  const auto n_test = static_cast<std::size_t>(std::floor(d.test_fraction * static_cast<double>(n)));
  if (n - n_test < 1) throw ConfigError("test split leaves no training rows");
  std::vector<std::size_t> train_rows(n - n_test);
  std::iota(train_rows.begin(), train_rows.end(), 0);
  problems::FiniteDataset train = all.subset(train_rows);
  if (n_test > 0) {
    std::vector<std::size_t> test_rows(n_test);
    std::iota(test_rows.begin(), test_rows.end(), n - n_test);
    out.test = all.subset(test_rows);
  }
  if (batch_size > train.size()) {
    throw ConfigError("batch_size " + std::to_string(batch_size) + " exceeds the " +
                      std::to_string(train.size()) + " training rows");
  }

  if (classification && d.label_noise.rate > 0.0) {
    RngStream label_rng = base.derive(kLabelStream);
    auto corrupted = problems::apply_label_noise(train, d.label_noise, label_rng);
    train = std::move(corrupted.data);
    out.flipped = std::move(corrupted.flipped);
  } else {
    out.flipped.assign(train.size(), false);
  }
  out.classification = classification;

  std::shared_ptr<problems::DatasetProblem> model;
  if (spec.name == "least_squares") {
    model = std::make_shared<problems::LeastSquares>(train.feature_dim());
  } else if (spec.name == "logistic") {
    model = std::make_shared<problems::LogisticRegression>(train.feature_dim());
  } else {
    const std::size_t classes = std::max<std::size_t>(all.num_classes, 2);
    model = std::make_shared<problems::TinyMlp>(train.feature_dim(), spec.hidden, classes);
  }
  out.model = model;
  out.train = std::make_shared<const problems::FiniteDataset>(std::move(train));
  out.oracle = std::make_shared<problems::DatasetOracle>(model, out.train, batch_size);
  return out;
}

Vector initial_point(const ProblemSpec& spec, const TrainingProblem& problem, std::uint64_t seed) {
  RngStream rng = RngStream(seed).derive(kInitStream);
  if (spec.name == "quadratic") {
    Vector dir(static_cast<Eigen::Index>(spec.quadratic.dim));
    rng.fill_normal(dir);
    return dir * (spec.quadratic.initial_distance / dir.norm());
  }
  if (spec.name == "rosenbrock") return Vector{{spec.rosenbrock.x0, spec.rosenbrock.y0}};
  if (const auto* mlp = dynamic_cast<const problems::TinyMlp*>(problem.model.get())) {
    return mlp->initial_weights(rng);
  }
  return Vector::Zero(static_cast<Eigen::Index>(problem.oracle->dim()));
}

Json RunResult::to_json() const {
  Json j = {{"config_digest", config_digest},
            {"seed", seed},
            {"optimizer", optimizer},
            {"prng", std::string(kRngAlgorithm)},
            {"final_loss", final_loss},
            {"min_grad_norm_sq", min_grad_norm_sq},
            {"steps", trajectory.empty() ? 0 : trajectory.back().step}};
  if (final_test_error) j["final_test_error"] = *final_test_error;
  if (best_test_error) j["best_test_error"] = *best_test_error;
  for (std::size_t i = 0; i < extra_names.size(); ++i) {
    if (!extra_columns[i].empty()) j["final_" + extra_names[i]] = extra_columns[i].back();
  }
  return j;
}

RunResult train(const ExperimentConfig& config, const optim::OptimizerSpec& optimizer,
                const TrainingProblem& problem, std::uint64_t seed, const std::string& digest,
                const TrainingOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const GradientOracle& oracle = *problem.oracle;
  ParamVector theta(initial_point(config.problem, problem, seed));
  const double limit = 1e6 * std::max(1.0, theta.values().norm());
  auto opt = optim::make_optimizer(optimizer, oracle.dim());
  const double base_lr = optim::learning_rate(optimizer);
  RngStream rng = RngStream(seed).derive(kTrainStream);

  RunResult result;
  result.config_digest = digest;
  result.seed = seed;
  result.optimizer = optim::optimizer_name(optimizer);
  result.trajectory = Trajectory(seed, digest);
  if (options.label_noise_metrics) {
    result.extra_names = {"train_error_noisy", "train_error_clean_subset", "train_error_flipped"};
    result.extra_columns.assign(3, {});
  }
  std::vector<std::size_t> clean_rows, flipped_rows;
  if (problem.train) {
    for (std::size_t i = 0; i < problem.train->size(); ++i) {
      (problem.flipped[i] ? flipped_rows : clean_rows).push_back(i);
    }
  }

  GradientSample full{Vector::Zero(static_cast<Eigen::Index>(oracle.dim())), std::nullopt};
  GradientSample noisy = full;
  double min_grad = std::numeric_limits<double>::infinity();

  auto record = [&](std::int64_t step) {
    oracle.full(theta.values(), full);
    const double loss = full.loss.value_or(oracle.loss(theta.values()));
    const double gsq = full.gradient.squaredNorm();
    if (!std::isfinite(loss) || !std::isfinite(gsq)) {
      throw NumericalError("training diverged: non-finite loss or gradient", step);
    }
    TrajectoryRecord rec;
    rec.step = step;
    rec.loss = loss;
    rec.grad_norm_sq = gsq;
    min_grad = std::min(min_grad, gsq);
    if (problem.classification && problem.test) {
      rec.test_error = problem.error(theta.values(), *problem.test);
      if (!result.best_test_error || *rec.test_error < *result.best_test_error) {
        result.best_test_error = rec.test_error;
      }
    }
    if (options.label_noise_metrics) {
      result.extra_columns[0].push_back(problem.error(theta.values(), *problem.train));
      result.extra_columns[1].push_back(problem.error(theta.values(), *problem.train, clean_rows));
      result.extra_columns[2].push_back(problem.error(theta.values(), *problem.train, flipped_rows));
    }
    if (options.snapshots) rec.snapshot = theta.values();
    result.trajectory.append(std::move(rec));
  };

  for (std::int64_t step = 0; step < config.steps; ++step) {
    if (step == 0 || (config.eval_every > 0 && step % config.eval_every == 0)) record(step);
    opt->set_learning_rate(base_lr * config.lr_schedule.multiplier(step));
    oracle.stochastic(theta.values(), rng, noisy);
    if (!noisy.gradient.allFinite()) {
      throw NumericalError("training diverged: non-finite stochastic gradient", step);
    }
    opt->step(theta, noisy);
    const double norm = theta.values().norm();
    if (!std::isfinite(norm) || norm > limit) {
      throw NumericalError("training diverged: parameter norm exceeded the divergence limit", step + 1);
    }
  }
  record(config.steps);

  result.final_loss = result.trajectory.back().loss;
  result.final_test_error = result.trajectory.back().test_error;
  result.min_grad_norm_sq = min_grad;
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace pnm::harness
