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
#include <limits>

#include "oracles.hpp"
#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/optim/heavy_ball.hpp"
#include "pnm/optim/pnm.hpp"
#include "pnm/posterior/lyapunov.hpp"
#include "pnm/posterior/stationary.hpp"
#include "pnm/problems/quadratic.hpp"

using namespace pnm;
using namespace pnm::posterior;

namespace {

problems::QuadraticModel scalar_quadratic(double h) {
  Matrix hess(1, 1);
  hess(0, 0) = h;
  return problems::QuadraticModel(ParamVector{0.0}, hess);
}

Matrix scalar(double v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("sgd stationary variance matches the discrete OU value") {
  const auto model = scalar_quadratic(1.0);
  RngStream rng(41);
  StationaryOptions opts;
  opts.samples = 40000;
  const auto est = simulate_stationary(model, scalar(1.0), optim::HbConfig::sgd(0.01), opts, rng);
  const double expected = oracle::sgd_ou_variance(0.01, 1.0, 1.0);
  CHECK(expected == doctest::Approx(0.01 / 1.99));
  CHECK(est.covariance(0, 0) == doctest::Approx(expected).epsilon(0.04));
  CHECK(est.thin == 100);
  CHECK(est.burn_in == 1000);
  CHECK(est.samples == 40000);
  CHECK(std::abs(est.mean[0]) < 5.0 * est.mean_standard_error[0] + 1e-12);
}

TEST_CASE("heavy ball stationary variance matches an exact discrete Lyapunov solve") {
  const auto model = scalar_quadratic(2.0);
  RngStream rng(42);
  StationaryOptions opts;
  opts.samples = 40000;
  opts.thin = 50;
  const optim::HbConfig hb{0.01, 0.5, 0.5, {}};
  const auto est = simulate_stationary(model, scalar(1.0), hb, opts, rng);
  const double expected = oracle::hb_stationary_variance(0.01, 0.5, 0.5, 2.0, 1.0);
  CHECK(est.covariance(0, 0) == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("pnm stationary variance matches an exact periodic Lyapunov solve") {
  for (double beta0 : {0.5, 1.0}) {
    const auto model = scalar_quadratic(1.0);
    RngStream rng(43);
    optim::PnmConfig pc;
    pc.lr = 0.02;
    pc.beta0 = beta0;
    pc.beta1 = 0.5;
    StationaryOptions opts;
    opts.samples = 40000;
    const auto est = simulate_stationary(model, scalar(1.0), pc, opts, rng);
    const double expected = oracle::pnm_stationary_variance(pc.effective_lr(), beta0, 0.5, 1.0, 1.0);
    CHECK(est.covariance(0, 0) == doctest::Approx(expected).epsilon(0.05));
  }
}

TEST_CASE("simulation is reproducible and rejects bad inputs") {
  const auto model = scalar_quadratic(1.0);
  StationaryOptions opts;
  RngStream a(44), b(44);
  const auto e1 = simulate_stationary(model, scalar(1.0), optim::HbConfig::sgd(0.1), opts, a);
  const auto e2 = simulate_stationary(model, scalar(1.0), optim::HbConfig::sgd(0.1), opts, b);
  CHECK(e1.covariance(0, 0) == e2.covariance(0, 0));
  opts.samples = 100;
  CHECK_THROWS_AS(simulate_stationary(model, scalar(1.0), optim::HbConfig::sgd(0.1), opts, a),
                  ConfigError);
  opts.samples = 10000;
  CHECK_THROWS_AS(simulate_stationary(model, Matrix::Identity(2, 2), optim::HbConfig::sgd(0.1),
                                      opts, a),
                  DimensionError);
  // lr * h = 2.5 is unstable
  try {
    simulate_stationary(model, scalar(1.0), optim::HbConfig::sgd(2.5), opts, a);
    FAIL("expected divergence");
  } catch (const NumericalError& e) {
    CHECK(e.step() >= 0);
  }
}

TEST_CASE("merging chains equals pooling their moments") {
  RngStream rng(45);
  const Vector eig{{0.5, 1.0}};
  const auto model = problems::QuadraticModel::random_spd(eig, rng, Vector::Zero(2));
  StationaryOptions opts;
  opts.thin = 5;
  std::vector<StationaryEstimate> parts;
  for (int c = 0; c < 3; ++c) {
    RngStream chain = rng.derive(static_cast<std::uint64_t>(c));
    parts.push_back(simulate_stationary(model, Matrix::Identity(2, 2),
                                        optim::HbConfig::sgd(0.05), opts, chain));
  }
  const auto merged = merge_estimates(parts);
  CHECK(merged.samples == 30000);
  Vector mean = Vector::Zero(2);
  Matrix second = Matrix::Zero(2, 2);
  for (const auto& p : parts) {
    mean += p.mean.values() / 3.0;
    second += (p.covariance + p.mean.values() * p.mean.values().transpose()) / 3.0;
  }
  CHECK((merged.mean.values() - mean).norm() < 1e-12);
  CHECK((merged.covariance - (second - mean * mean.transpose())).norm() < 1e-12);
  CHECK(merged.mean_standard_error[0] < parts[0].mean_standard_error[0]);
  CHECK_THROWS_AS(merge_estimates({}), ConfigError);
}

TEST_CASE("lyapunov residual") {
  RngStream rng(46);
  const auto model =
      problems::QuadraticModel::random_spd(Vector{{0.3, 1.0, 2.0}}, rng, Vector::Zero(3));
  const Matrix& h = model.hessian_matrix();
  // With C proportional to H the continuous solution is Sigma = (eta/2) (C H^-1).
  const Matrix c = 0.7 * h;
  const Matrix sigma = 0.5 * 0.01 * 0.7 * Matrix::Identity(3, 3);
  CHECK(lyapunov_residual(sigma, h, 0.01 * c) < 1e-12);
  CHECK(lyapunov_residual(2.0 * sigma, h, 0.01 * c) == doctest::Approx(1.0));
  CHECK(lyapunov_residual(Matrix::Zero(3, 3), h, Matrix::Zero(3, 3)) == 0.0);
  CHECK(std::isinf(lyapunov_residual(sigma, h, Matrix::Zero(3, 3))));
  Matrix asym = sigma;
  asym(0, 1) += 1.0;
  CHECK_THROWS_AS(lyapunov_residual(asym, h, c), DimensionError);
}

TEST_CASE("closed-form posterior scales") {
  CHECK(theoretical_posterior_covariance(PosteriorKind::kSgd, 0.1, 4) == doctest::Approx(0.0125));
  CHECK(theoretical_posterior_covariance(PosteriorKind::kPnm, 0.1, 4, 1.0) ==
        doctest::Approx(5 * 0.0125));
  CHECK(theoretical_posterior_covariance(PosteriorKind::kHb, 0.1, 4, 1.0) ==
        doctest::Approx(0.0125));
  CHECK_THROWS_AS(theoretical_posterior_covariance(PosteriorKind::kSgd, 0.1, 0), ConfigError);
  CHECK(parse_posterior_kind(to_string(PosteriorKind::kHb)) == PosteriorKind::kHb);
  CHECK_THROWS_AS(parse_posterior_kind("adam"), ConfigError);
}
