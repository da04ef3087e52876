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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "pnm/convergence/bound.hpp"
#include "pnm/convergence/empirical_rate.hpp"
#include "pnm/core/error.hpp"
#include "pnm/problems/noise_oracles.hpp"
#include "pnm/problems/quadratic.hpp"
#include "pnm/problems/rosenbrock.hpp"

using namespace pnm;
using namespace pnm::convergence;

TEST_CASE("bound reduces to the deterministic term without noise") {
  ConvergenceBoundInputs in;
  in.smoothness = 2.0;
  in.gradient_bound = 0.0;
  in.noise_variance = 0.0;
  in.beta = 0.0;
  in.beta0 = 0.0;
  in.step_constant = 0.5;
  in.initial_loss = 3.0;
  in.loss_lower_bound = 1.0;
  for (std::int64_t t : {0, 3, 99, 9999}) {
    const double tp1 = static_cast<double>(t + 1);
    CHECK(gradient_norm_bound(in, t) ==
          doctest::Approx(2.0 * 2.0 / tp1 * std::max(4.0, std::sqrt(tp1) / 0.5)));
  }
}

TEST_CASE("bound at a hand-evaluated point") {
  ConvergenceBoundInputs in;
  in.smoothness = 1.0;
  in.gradient_bound = 1.0;
  in.noise_variance = 1.0;
  in.step_constant = 1.0;
  in.beta = 0.81;
  in.beta0 = 1.0;
  in.initial_loss = 1.0;
  in.loss_lower_bound = 0.0;
  const double c1 = ((0.81 + 0.19) * (0.81 + 0.19) * 2.0 + 0.19 * 0.19) / (0.19 * 0.19);
  CHECK(in.noise_constant() == doctest::Approx(c1));
  CHECK(c1 == doctest::Approx(56.402).epsilon(1e-4));
  CHECK(gradient_norm_bound(in, 99) == doctest::Approx(0.2 + c1 / 10.0));
}

TEST_CASE("bound is nonincreasing once the square-root branch is active") {
  ConvergenceBoundInputs in;
  in.smoothness = 1.0;
  in.gradient_bound = 2.0;
  in.noise_variance = 0.5;
  in.step_constant = 1.0;
  in.initial_loss = 4.0;
  double prev = gradient_norm_bound(in, 4);
  for (std::int64_t t = 5; t < 5000; t += 7) {
    const double b = gradient_norm_bound(in, t);
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("bound input validation") {
  ConvergenceBoundInputs in;
  in.smoothness = 0.0;
  CHECK_THROWS_AS(gradient_norm_bound(in, 1), ConfigError);
  in = {};
  in.step_constant = -1.0;
  CHECK_THROWS_AS(gradient_norm_bound(in, 1), ConfigError);
  in = {};
  in.beta = 1.0;
  CHECK_THROWS_AS(gradient_norm_bound(in, 1), ConfigError);
  in = {};
  CHECK_THROWS_AS(gradient_norm_bound(in, -1), ConfigError);
}

TEST_CASE("prescribed step") {
  CHECK(prescribed_step(1.0, 1.0, 100) == doctest::Approx(0.1));
  CHECK(prescribed_step(10.0, 1.0, 100) == doctest::Approx(0.05));
  CHECK_THROWS_AS(prescribed_step(1.0, 1.0, 0), ConfigError);
}

TEST_CASE("fit_line recovers an exact line") {
  const auto [slope, intercept] = fit_line({0.0, 1.0, 2.0, 3.0}, {1.0, -1.0, -3.0, -5.0});
  CHECK(slope == doctest::Approx(-2.0));
  CHECK(intercept == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_line({1.0}, {1.0}), ConfigError);
  CHECK_THROWS_AS(fit_line({1.0, 1.0}, {0.0, 2.0}), ConfigError);
}

TEST_CASE("deterministic quadratic stays below the bound") {
  RngStream rng(61);
  auto q = std::make_shared<problems::QuadraticModel>(
      problems::QuadraticModel::random_spd(Vector{{0.5, 1.0}}, rng, Vector::Zero(2)));
  RateOptions opts;
  opts.horizons = {10, 100, 1000};
  opts.seeds = 2;
  opts.smoothness = 1.0;
  opts.initial = Vector{{1.0, 1.0}};
  const auto r = empirical_rate(*q, opts);
  for (const auto& p : r.points) {
    CHECK(p.mean_min_grad_sq <= p.bound);
    CHECK(p.std_min_grad_sq == 0.0);
    CHECK(p.measured_smoothness == doctest::Approx(1.0));
  }
}

TEST_CASE("noisy rosenbrock stays below the bound with measured constants") {
  auto base = std::make_shared<problems::Rosenbrock>();
  problems::BoundedNoiseOracle oracle(base, 0.5);
  RateOptions opts;
  opts.horizons = {100, 1000};
  opts.seeds = 3;
  opts.smoothness = 1000.0;
  opts.step_constant = 0.01;
  opts.initial = Vector{{-1.2, 1.0}};
  opts.track_hessian = true;
  opts.threads = 2;
  const auto r = empirical_rate(oracle, opts);
  for (const auto& p : r.points) {
    CHECK(std::isfinite(p.mean_min_grad_sq));
    CHECK(p.mean_min_grad_sq <= p.bound);
    CHECK(p.measured_noise_variance == doctest::Approx(2.0 * 0.25 / 3.0));
  }
  opts.threads = 1;
  const auto serial = empirical_rate(oracle, opts);
  CHECK(serial.slope == r.slope);
}

TEST_CASE("empirical rate input checks") {
  problems::Rosenbrock r;
  RateOptions opts;
  opts.initial = Vector{{0.0}};
  CHECK_THROWS_AS(empirical_rate(r, opts), DimensionError);
  opts.initial = Vector{{0.0, 0.0}};
  opts.horizons = {100};
  CHECK_THROWS_AS(empirical_rate(r, opts), ConfigError);
}
