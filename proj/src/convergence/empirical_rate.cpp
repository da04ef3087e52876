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

#include "pnm/convergence/empirical_rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "pnm/core/error.hpp"
#include "pnm/core/parallel.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/optim/pnm.hpp"

namespace pnm::convergence {
namespace {

struct SeedRun {
  double min_grad_sq = std::numeric_limits<double>::infinity();
  double max_smoothness = 0.0;
  double max_grad_norm = 0.0;
  double noise_sq_sum = 0.0;
  std::int64_t steps = 0;
};

double largest_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

SeedRun run_one(const GradientOracle& oracle, const RateOptions& options, std::int64_t horizon,
                double lr, std::size_t seed_index) {
  RngStream rng = RngStream(options.base_seed).derive(seed_index);
  optim::PnmConfig config;
  config.lr = lr;
  config.beta0 = options.beta0;
  config.beta1 = options.beta1;
  optim::PnmState state(oracle.dim());
  ParamVector theta(options.initial);

  SeedRun run;
  GradientSample full{Vector::Zero(static_cast<Eigen::Index>(oracle.dim())), std::nullopt};
  GradientSample noisy = full;
  const bool hessian = oracle.has_hessian();
  for (std::int64_t k = 0; k < horizon; ++k) {
    oracle.full(theta.values(), full);
    const double gsq = full.gradient.squaredNorm();
    if (!std::isfinite(gsq)) {
      throw NumericalError("convergence run diverged (horizon " + std::to_string(horizon) +
                               ", seed " + std::to_string(seed_index) + ")",
                           k);
    }
    run.min_grad_sq = std::min(run.min_grad_sq, gsq);
    run.max_grad_norm = std::max(run.max_grad_norm, std::sqrt(gsq));
    if (hessian && (options.track_hessian || k == 0)) {
      run.max_smoothness =
          std::max(run.max_smoothness, largest_eigenvalue(oracle.hessian(theta.values())));
    }
    oracle.stochastic(theta.values(), rng, noisy);
    run.noise_sq_sum += (noisy.gradient - full.gradient).squaredNorm();
    optim::pnm_step(state, config, theta, noisy);
  }
  run.steps = horizon;
  return run;
}

}  // namespace

std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ConfigError("fit_line needs at least two points of equal count");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw ConfigError("fit_line: x values are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

RateResult empirical_rate(const GradientOracle& oracle, const RateOptions& options) {
  if (options.horizons.size() < 2) throw ConfigError("need at least two horizons");
  if (options.seeds == 0) throw ConfigError("need at least one seed");
  if (!oracle.has_full_gradient()) throw ConfigError("oracle must provide full gradients");
  if (options.initial.size() != static_cast<Eigen::Index>(oracle.dim())) {
    throw DimensionError("initial point has wrong dimension");
  }
  for (auto t : options.horizons) {
    if (t < 1) throw ConfigError("horizons must be >= 1");
  }

  const double norm = optim::pnm_normalization(options.beta0);
  const double initial_loss = oracle.loss(options.initial);
  const std::size_t per_horizon = options.seeds;
  std::vector<SeedRun> runs(options.horizons.size() * per_horizon);
  parallel_for(runs.size(), options.threads, [&](std::size_t job) {
    const std::size_t h = job / per_horizon;
    const std::size_t s = job % per_horizon;
    const std::int64_t horizon = options.horizons[h];
    const double step = prescribed_step(options.smoothness, options.step_constant, horizon);
    runs[job] = run_one(oracle, options, horizon, step * norm, s);
  });

  RateResult result;
  result.seeds = per_horizon;
  std::vector<double> xs, ys;
  for (std::size_t h = 0; h < options.horizons.size(); ++h) {
    RatePoint p;
    p.horizon = options.horizons[h];
    p.step = prescribed_step(options.smoothness, options.step_constant, p.horizon);
    double sum = 0.0, sum_sq = 0.0, noise_sum = 0.0;
    std::int64_t noise_count = 0;
    for (std::size_t s = 0; s < per_horizon; ++s) {
      const SeedRun& r = runs[h * per_horizon + s];
      sum += r.min_grad_sq;
      p.measured_smoothness = std::max(p.measured_smoothness, r.max_smoothness);
      p.measured_gradient_bound = std::max(p.measured_gradient_bound, r.max_grad_norm);
      noise_sum += r.noise_sq_sum;
      noise_count += r.steps;
    }
    const double count = static_cast<double>(per_horizon);
    p.mean_min_grad_sq = sum / count;
    for (std::size_t s = 0; s < per_horizon; ++s) {
      const double d = runs[h * per_horizon + s].min_grad_sq - p.mean_min_grad_sq;
      sum_sq += d * d;
    }
    p.std_min_grad_sq = std::sqrt(sum_sq / count);
    p.measured_noise_variance = oracle.noise_second_moment().value_or(
        noise_sum / static_cast<double>(noise_count));
    if (p.measured_smoothness == 0.0) p.measured_smoothness = options.smoothness;

    ConvergenceBoundInputs in;
    in.smoothness = p.measured_smoothness;
    in.gradient_bound = p.measured_gradient_bound;
    in.noise_variance = p.measured_noise_variance;
    in.step_constant = options.step_constant;
    in.initial_loss = initial_loss;
    in.loss_lower_bound = options.loss_lower_bound;
    in.beta = options.beta1 * options.beta1;
    in.beta0 = options.beta0;
    p.bound = gradient_norm_bound(in, p.horizon - 1);

    xs.push_back(std::log(static_cast<double>(p.horizon)));
    ys.push_back(std::log(p.mean_min_grad_sq));
    result.points.push_back(p);
  }
  std::tie(result.slope, result.intercept) = fit_line(xs, ys);
  return result;
}

}  // namespace pnm::convergence
