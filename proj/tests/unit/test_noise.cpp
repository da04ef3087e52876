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

#include "oracles.hpp"
#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/noise/amplification.hpp"
#include "pnm/noise/covariance.hpp"
#include "pnm/noise/momentum_variance.hpp"
#include "pnm/problems/dataset_problems.hpp"

using namespace pnm;
using namespace pnm::noise;

TEST_CASE("amplification factor") {
  CHECK(amplification_factor(0.0) == 1.0);
  CHECK(amplification_factor(1.0) == 5.0);
  CHECK(amplification_factor(0.5) == doctest::Approx(2.5));
  CHECK(amplification_factor(2.0) == doctest::Approx(13.0));
  // the recovering beta0 damps rather than amplifies
  const double b1 = 0.9;
  CHECK(amplification_factor(-b1 / (1 + b1)) < 1.0);
  // minimum of the parabola sits at beta0 = -1/2
  CHECK(amplification_factor(-0.5) == doctest::Approx(0.5));
}

TEST_CASE("finite-time momentum noise variance equals the squared weight sum") {
  for (double beta1 : {0.0, 0.5, 0.9, 0.99}) {
    for (double beta3 : {1.0, 1.0 - beta1}) {
      for (std::int64_t t : {0, 1, 7, 100}) {
        CHECK(momentum_noise_variance(beta1, beta3, 2.0, t) ==
              doctest::Approx(oracle::squared_weight_sum(beta1, beta3, 2.0, t)).epsilon(1e-12));
      }
      CHECK(momentum_noise_variance(beta1, beta3, 2.0, 100000) ==
            doctest::Approx(momentum_noise_variance(beta1, beta3, 2.0)).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(momentum_noise_variance(1.0, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(momentum_noise_variance(0.5, 1.0, 1.0, -1), ConfigError);
}

TEST_CASE("momentum noise is below plain gradient noise for beta3 = 1 - beta1") {
  for (double beta1 = 0.05; beta1 < 1.0; beta1 += 0.1) {
    CHECK(momentum_noise_variance(beta1, 1.0 - beta1, 1.0) < 1.0);
  }
}

TEST_CASE("pnm buffer variance is the squared-beta ema variance") {
  const double beta1 = 0.9;
  const double b = beta1 * beta1;
  CHECK(pnm_buffer_variance(beta1, 3.0) ==
        doctest::Approx(momentum_noise_variance(b, 1.0 - b, 3.0)));
}

TEST_CASE("simulated pnm direction variance ratio tracks the amplification factor") {
  for (double beta0 : {0.5, 1.0, 2.0}) {
    RngStream rng(31);
    const auto r = stationary_momentum_variance(MomentumKind::kPnm, 0.9, beta0, 1.0, 200000, rng);
    CHECK(r.ratio == doctest::Approx(amplification_factor(beta0)).epsilon(0.03));
    CHECK(r.buffer.variance == doctest::Approx(pnm_buffer_variance(0.9, 1.0)).epsilon(0.03));
    CHECK(r.ratio_standard_error > 0.0);
    CHECK(r.burn_in >= 100);
  }
}

TEST_CASE("simulated heavy ball buffer matches the closed form") {
  RngStream rng(32);
  const auto r = stationary_momentum_variance(MomentumKind::kHeavyBall, 0.5, 0.0, 2.0, 200000, rng);
  CHECK(r.buffer.variance == doctest::Approx(momentum_noise_variance(0.5, 0.5, 2.0)).epsilon(0.03));
  CHECK(r.ratio == doctest::Approx(1.0));
}

TEST_CASE("momentum simulation input checks") {
  RngStream rng(33);
  CHECK_THROWS_AS(stationary_momentum_variance(MomentumKind::kPnm, 0.9, 1.0, 1.0, 100, rng),
                  ConfigError);
  CHECK_THROWS_AS(stationary_momentum_variance(MomentumKind::kPnm, 1.0, 1.0, 1.0, 20000, rng),
                  ConfigError);
  const auto slow = stationary_momentum_variance(MomentumKind::kPnm, 0.999, 1.0, 1.0, 10000, rng);
  CHECK(slow.warning.has_value());
}

namespace {

problems::FiniteDataset regression_data(std::size_t n, std::size_t d, RngStream& rng) {
  problems::FiniteDataset data;
  data.features = Matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < data.features.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.features.cols(); ++j) {
      data.features(i, j) = rng.normal() * (1.0 + static_cast<double>(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) data.labels.push_back(rng.normal());
  return data;
}

}  // namespace

TEST_CASE("gradient noise covariance matches the exact without-replacement covariance") {
  RngStream rng(34);
  const auto data = regression_data(200, 3, rng);
  problems::LeastSquares ls(3);
  const Vector theta{{0.1, 0.2, -0.3}};
  // Independent oracle: per-example gradients and the finite-population formula.
  Matrix grads(200, 3);
  for (Eigen::Index i = 0; i < 200; ++i) {
    const double r = data.features.row(i).dot(theta) - data.labels[static_cast<std::size_t>(i)];
    grads.row(i) = r * data.features.row(i);
  }
  const Eigen::RowVectorXd mean = grads.colwise().mean();
  const Matrix centered = grads.rowwise() - mean;
  const Matrix s = centered.transpose() * centered / 199.0;
  const double batch = 10.0;
  const Matrix exact = s / batch * (1.0 - batch / 200.0);
  const auto est = estimate_gradient_noise_covariance(ls, data, theta, 10, 100000, rng);
  CHECK_FALSE(est.degenerate);
  CHECK(est.sample_count == 100000);
  CHECK((est.matrix - exact).norm() / exact.norm() < 0.03);
  CHECK((est.matrix - est.matrix.transpose()).norm() == 0.0);
}

TEST_CASE("full-batch covariance is degenerate") {
  RngStream rng(35);
  const auto data = regression_data(50, 2, rng);
  problems::LeastSquares ls(2);
  const auto est = estimate_gradient_noise_covariance(ls, data, Vector::Zero(2), 50, 1000, rng);
  CHECK(est.degenerate);
  CHECK(est.matrix.norm() == 0.0);
  CHECK_THROWS_AS(estimate_gradient_noise_covariance(ls, data, Vector::Zero(2), 5, 10, rng),
                  ConfigError);
}

TEST_CASE("pearson correlation") {
  const Vector a{{1.0, 2.0, 3.0, 4.0}};
  CHECK(pearson_correlation(a, 2.0 * a + Vector::Constant(4, 1.0)) == doctest::Approx(1.0));
  CHECK(pearson_correlation(a, -a) == doctest::Approx(-1.0));
  CHECK(pearson_correlation(a, Vector{{1.0, -1.0, -1.0, 1.0}}) == doctest::Approx(0.0));
}
