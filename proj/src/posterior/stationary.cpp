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

#include "pnm/posterior/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pnm/core/error.hpp"
#include "pnm/problems/noise_oracles.hpp"

namespace pnm::posterior {
namespace {

constexpr std::size_t kMinSamples = 10000;
constexpr std::size_t kMeanBatches = 100;

// Sufficient statistics of the offsets d = theta - theta*.
struct Moments {
  Vector sum;
  Matrix outer;
  std::size_t count = 0;
};

Moments combine(const Moments& a, const Moments& b) {
  return {a.sum + b.sum, a.outer + b.outer, a.count + b.count};
}

}  // namespace

StationaryEstimate simulate_stationary(const problems::QuadraticModel& model,
                                       const Matrix& noise_covariance,
                                       const optim::OptimizerSpec& optimizer,
                                       const StationaryOptions& options, RngStream& rng) {
  const auto n = static_cast<Eigen::Index>(model.dim());
  if (noise_covariance.rows() != n || noise_covariance.cols() != n) {
    throw DimensionError("noise covariance must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  if (options.samples < kMinSamples) {
    throw ConfigError("simulate_stationary needs at least " + std::to_string(kMinSamples) +
                      " retained samples");
  }
  optim::validate(optimizer);
  const double lr = optim::learning_rate(optimizer);

  std::size_t thin = options.thin;
  if (thin == 0) {
    thin = static_cast<std::size_t>(std::ceil(1.0 / (lr * model.min_eigenvalue())));
    thin = std::max<std::size_t>(thin, 1);
  }
  const std::size_t burn_in = options.burn_in > 0 ? options.burn_in : 10 * thin;

  const Vector& minimum = model.minimum().values();
  const Matrix& h = model.hessian_matrix();
  const bool diagonal_noise =
      (noise_covariance - Matrix(noise_covariance.diagonal().asDiagonal())).isZero(0.0);
  Vector noise_scale;
  Matrix noise_root;
  if (diagonal_noise) {
    if ((noise_covariance.diagonal().array() < 0.0).any()) {
      throw ConfigError("noise covariance must be positive semidefinite");
    }
    noise_scale = noise_covariance.diagonal().cwiseSqrt();
  } else {
    noise_root = problems::psd_sqrt(noise_covariance);
  }

  ParamVector theta(options.initial ? *options.initial : minimum);
  require_same_dim(theta.size(), model.minimum().size(), "simulate_stationary");
  const double limit_sq = std::pow(1e6 * std::max(1.0, (theta.values() - minimum).norm()), 2);

  auto opt = optim::make_optimizer(optimizer, model.dim());
  GradientSample g{Vector::Zero(n), std::nullopt};
  Vector offset(n);
  Vector xi(n);

  const std::size_t batch_len = std::max<std::size_t>(options.samples / kMeanBatches, 1);
  std::vector<Vector> batch_means;
  Moments moments{Vector::Zero(n), Matrix::Zero(n, n), 0};
  Vector batch_sum = Vector::Zero(n);
  std::size_t batch_count = 0;

  const std::size_t total = burn_in + options.samples * thin;
  for (std::size_t step = 0; step < total; ++step) {
    offset = theta.values() - minimum;
    g.gradient.noalias() = h * offset;
    rng.fill_normal(xi);
    if (diagonal_noise) {
      g.gradient.array() += noise_scale.array() * xi.array();
    } else {
      g.gradient.noalias() += noise_root * xi;
    }
    opt->step(theta, g);

    offset = theta.values() - minimum;
    const double dist_sq = offset.squaredNorm();
    if (!(dist_sq <= limit_sq)) {
      throw NumericalError("stationary simulation diverged", static_cast<std::int64_t>(step));
    }
    if (step < burn_in || (step - burn_in + 1) % thin != 0) continue;

    moments.sum += offset;
    moments.outer.selfadjointView<Eigen::Lower>().rankUpdate(offset);
    ++moments.count;
    batch_sum += offset;
    if (++batch_count == batch_len) {
      batch_means.push_back(batch_sum / static_cast<double>(batch_len));
      batch_sum.setZero();
      batch_count = 0;
    }
  }

  StationaryEstimate est;
  const double count = static_cast<double>(moments.count);
  const Vector mean_offset = moments.sum / count;
  est.mean = ParamVector(Vector(minimum + mean_offset));
  Matrix outer = moments.outer.selfadjointView<Eigen::Lower>();
  est.covariance = outer / count - mean_offset * mean_offset.transpose();
  est.covariance = 0.5 * (est.covariance + est.covariance.transpose()).eval();

  est.mean_standard_error = Vector::Zero(n);
  if (batch_means.size() >= 2) {
    Vector avg = Vector::Zero(n);
    for (const auto& b : batch_means) avg += b;
    avg /= static_cast<double>(batch_means.size());
    Vector ss = Vector::Zero(n);
    for (const auto& b : batch_means) ss.array() += (b - avg).array().square();
    const double k = static_cast<double>(batch_means.size());
    est.mean_standard_error = (ss / ((k - 1.0) * k)).cwiseSqrt();
  }
  est.burn_in = burn_in;
  est.samples = moments.count;
  est.thin = thin;
  return est;
}

StationaryEstimate merge_estimates(const std::vector<StationaryEstimate>& parts) {
  if (parts.empty()) throw ConfigError("merge_estimates: no estimates given");
  const auto n = parts.front().covariance.rows();
  std::vector<Moments> level;
  level.reserve(parts.size());
  for (const auto& p : parts) {
    if (p.covariance.rows() != n) throw DimensionError("merge_estimates: dimension mismatch");
    const double c = static_cast<double>(p.samples);
    const Vector& mu = p.mean.values();
    level.push_back({mu * c, (p.covariance + mu * mu.transpose()) * c, p.samples});
  }
  while (level.size() > 1) {
    std::vector<Moments> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(combine(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  const Moments& total = level.front();
  const double count = static_cast<double>(total.count);

  StationaryEstimate out;
  const Vector mean = total.sum / count;
  out.mean = ParamVector(mean);
  out.covariance = total.outer / count - mean * mean.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  Vector var_of_mean = Vector::Zero(n);
  for (const auto& p : parts) {
    const double w = static_cast<double>(p.samples) / count;
    var_of_mean.array() += w * w * p.mean_standard_error.array().square();
  }
  out.mean_standard_error = var_of_mean.cwiseSqrt();
  out.burn_in = parts.front().burn_in;
  out.thin = parts.front().thin;
  out.samples = total.count;
  return out;
}

}  // namespace pnm::posterior
