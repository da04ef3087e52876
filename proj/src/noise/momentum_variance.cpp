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

#include "pnm/noise/momentum_variance.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pnm/core/error.hpp"
#include "pnm/optim/heavy_ball.hpp"
#include "pnm/optim/pnm.hpp"

namespace pnm::noise {
namespace {

constexpr std::size_t kBatches = 100;
constexpr std::size_t kMinSamples = 10000;

double variance_of(const std::vector<double>& xs, std::size_t begin, std::size_t end) {
  double mean = 0.0;
  for (std::size_t i = begin; i < end; ++i) mean += xs[i];
  mean /= static_cast<double>(end - begin);
  double ss = 0.0;
  for (std::size_t i = begin; i < end; ++i) ss += (xs[i] - mean) * (xs[i] - mean);
  return ss / static_cast<double>(end - begin - 1);
}

double std_error(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
}

}  // namespace

MomentumNoiseReport stationary_momentum_variance(MomentumKind kind, double beta1, double beta0,
                                                 double sigma2, std::size_t steps,
                                                 RngStream& rng) {
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("beta1 must lie in [0, 1)");
  if (!(sigma2 > 0.0)) throw ConfigError("noise variance must be > 0");
  if (steps < kMinSamples) {
    throw ConfigError("stationary_momentum_variance: need at least " +
                      std::to_string(kMinSamples) + " samples");
  }

  MomentumNoiseReport report;
  report.kind = kind;
  report.beta1 = beta1;
  report.beta0 = beta0;
  report.sigma2 = sigma2;
  const double mixing = 1.0 / (1.0 - beta1 * beta1);
  report.burn_in = static_cast<std::size_t>(std::ceil(100.0 * mixing));
  if (static_cast<double>(steps) < 100.0 * mixing) {
    report.warning = "retained samples below 100 mixing times";
  }

  const double sigma = std::sqrt(sigma2);
  std::vector<double> direction(steps);
  std::vector<double> buffer(steps);
  std::vector<double> lagged(steps);
  ParamVector theta = ParamVector::zeros(1);
  GradientSample g{Vector::Zero(1), std::nullopt};

  if (kind == MomentumKind::kPnm) {
    optim::PnmConfig config;
    config.lr = 1.0;
    config.beta0 = beta0;
    config.beta1 = beta1;
    optim::PnmState state(1);
    for (std::size_t t = 0; t < report.burn_in + steps; ++t) {
      g.gradient[0] = sigma * rng.normal();
      optim::pnm_step(state, config, theta, g);
      theta.mutable_values()[0] = 0.0;
      if (t < report.burn_in) continue;
      const std::size_t i = t - report.burn_in;
      const double m_t = state.latest()[0];
      const double m_prev = state.previous()[0];
      buffer[i] = m_t;
      lagged[i] = m_prev;
      direction[i] = (1.0 + beta0) * m_t - beta0 * m_prev;
    }
  } else {
    optim::HbConfig config{1.0, beta1, 1.0 - beta1, {}};
    optim::HbState state(1);
    double prev = 0.0;
    for (std::size_t t = 0; t < report.burn_in + steps; ++t) {
      g.gradient[0] = sigma * rng.normal();
      optim::hb_step(state, config, theta, g);
      theta.mutable_values()[0] = 0.0;
      const double m_t = state.momentum[0];
      if (t >= report.burn_in) {
        const std::size_t i = t - report.burn_in;
        buffer[i] = m_t;
        lagged[i] = prev;
        direction[i] = m_t;
      }
      prev = m_t;
    }
  }

  report.direction = {variance_of(direction, 0, steps), steps, 0.0};
  report.buffer = {variance_of(buffer, 0, steps), steps, 0.0};
  report.ratio = report.direction.variance / report.buffer.variance;

  const std::size_t batch_len = steps / kBatches;
  std::vector<double> dir_vars, buf_vars, ratios;
  for (std::size_t b = 0; b < kBatches; ++b) {
    const std::size_t lo = b * batch_len;
    const std::size_t hi = lo + batch_len;
    const double dv = variance_of(direction, lo, hi);
    const double bv = variance_of(buffer, lo, hi);
    dir_vars.push_back(dv);
    buf_vars.push_back(bv);
    ratios.push_back(dv / bv);
  }
  report.direction.standard_error = std_error(dir_vars);
  report.buffer.standard_error = std_error(buf_vars);
  report.ratio_standard_error = std_error(ratios);

  double mb = 0.0, ml = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    mb += buffer[i];
    ml += lagged[i];
  }
  mb /= static_cast<double>(steps);
  ml /= static_cast<double>(steps);
  double sbl = 0.0, sbb = 0.0, sll = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    sbl += (buffer[i] - mb) * (lagged[i] - ml);
    sbb += (buffer[i] - mb) * (buffer[i] - mb);
    sll += (lagged[i] - ml) * (lagged[i] - ml);
  }
  report.lag_one_correlation = sbl / std::sqrt(sbb * sll);
  return report;
}

}  // namespace pnm::noise
