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
#include <vector>

#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/optim/adam.hpp"
#include "pnm/optim/adapnm.hpp"
#include "pnm/optim/heavy_ball.hpp"
#include "pnm/optim/optimizer.hpp"
#include "pnm/optim/pnm.hpp"
#include "pnm/optim/reformulation.hpp"
#include "pnm/optim/weight_decay.hpp"
#include "pnm/problems/quadratic.hpp"
#include "pnm/problems/rosenbrock.hpp"

using namespace pnm;
using namespace pnm::optim;

namespace {

GradientSample grad_of(const Vector& g) { return {g, std::nullopt}; }

std::vector<Vector> random_gradients(std::uint64_t seed, int count, int dim) {
  RngStream rng(seed);
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) {
    Vector g(dim);
    rng.fill_normal(g);
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("heavy ball matches a hand-rolled recursion") {
  const HbConfig config{0.05, 0.8, 0.3, {}};
  HbState state(3);
  ParamVector theta{1.0, -2.0, 0.5};
  std::vector<double> th{1.0, -2.0, 0.5}, m(3, 0.0);
  for (const auto& g : random_gradients(1, 20, 3)) {
    hb_step(state, config, theta, grad_of(g));
    for (int i = 0; i < 3; ++i) {
      m[i] = 0.8 * m[i] + 0.3 * g[i];
      th[i] -= 0.05 * m[i];
    }
  }
  for (int i = 0; i < 3; ++i) CHECK(theta[i] == doctest::Approx(th[i]).epsilon(1e-14));
  CHECK(state.t == 20);
}

TEST_CASE("sgd is heavy ball without momentum") {
  HbState state(2);
  ParamVector theta{1.0, 1.0};
  hb_step(state, HbConfig::sgd(0.1), theta, grad_of(Vector{{2.0, -4.0}}));
  CHECK(theta[0] == doctest::Approx(0.8));
  CHECK(theta[1] == doctest::Approx(1.4));
  CHECK(optimizer_name(OptimizerSpec{HbConfig::sgd(0.1)}) == "sgd");
  CHECK(optimizer_name(OptimizerSpec{HbConfig{}}) == "hb");
}

TEST_CASE("pnm normalization") {
  CHECK(pnm_normalization(1.0) == doctest::Approx(std::sqrt(5.0)));
  CHECK(pnm_normalization(0.0) == doctest::Approx(1.0));
  CHECK(pnm_normalization(-0.5) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("pnm matches a hand-rolled two-buffer recursion") {
  PnmConfig config;
  config.lr = 0.07;
  config.beta0 = 1.3;
  config.beta1 = 0.85;
  PnmState state(2);
  ParamVector theta{0.3, -0.7};
  std::vector<double> th{0.3, -0.7};
  std::vector<double> even(2, 0.0), odd(2, 0.0);
  const double b = 0.85 * 0.85;
  const double step = 0.07 / std::sqrt(2.3 * 2.3 + 1.3 * 1.3);
  int t = 0;
  for (const auto& g : random_gradients(2, 25, 2)) {
    pnm_step(state, config, theta, grad_of(g));
    auto& cur = (t % 2 == 0) ? even : odd;
    auto& other = (t % 2 == 0) ? odd : even;
    for (int i = 0; i < 2; ++i) {
      cur[i] = b * cur[i] + (1.0 - b) * g[i];
      th[i] -= step * ((1.0 + 1.3) * cur[i] - 1.3 * other[i]);
    }
    CHECK(state.latest()[0] == doctest::Approx(cur[0]).epsilon(1e-14));
    CHECK(state.previous()[1] == doctest::Approx(other[1]).epsilon(1e-14));
    ++t;
  }
  for (int i = 0; i < 2; ++i) CHECK(theta[i] == doctest::Approx(th[i]).epsilon(1e-13));
}

TEST_CASE("pnm with beta0 = 0 uses a single buffer per parity") {
  PnmConfig config;
  config.lr = 0.1;
  config.beta0 = 0.0;
  config.beta1 = 0.5;
  PnmState state(1);
  ParamVector theta{0.0};
  pnm_step(state, config, theta, grad_of(Vector{{1.0}}));
  // m_0 = 0.75, step 0.1
  CHECK(theta[0] == doctest::Approx(-0.075));
  pnm_step(state, config, theta, grad_of(Vector{{1.0}}));
  CHECK(theta[0] == doctest::Approx(-0.15));
}

TEST_CASE("momentum recovery holds for random beta1 and gradients") {
  RngStream rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const double beta1 = 0.05 + 0.9 * rng.uniform();
    const double lr = 0.001 + 0.1 * rng.uniform();
    const PnmConfig pc = pnm_recovering_momentum(lr, beta1);
    CHECK(pc.beta0 == doctest::Approx(-beta1 / (1.0 + beta1)));
    const HbConfig hc{lr, beta1, 1.0 - beta1, {}};
    PnmState ps(3);
    HbState hs(3);
    ParamVector a{1.0, 2.0, 3.0}, b{1.0, 2.0, 3.0};
    for (const auto& g : random_gradients(100 + trial, 200, 3)) {
      pnm_step(ps, pc, a, grad_of(g));
      hb_step(hs, hc, b, grad_of(g));
    }
    CHECK((a.values() - b.values()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("adam first step has magnitude close to lr") {
  AdamConfig config;
  config.lr = 0.01;
  AdamState state(2);
  ParamVector theta{0.0, 0.0};
  adam_step(state, config, theta, grad_of(Vector{{3.0, -0.5}}));
  // m_hat = g, v_hat = g^2, so the step is lr * g / (|g| + eps)
  CHECK(theta[0] == doctest::Approx(-0.01).epsilon(1e-6));
  CHECK(theta[1] == doctest::Approx(0.01).epsilon(1e-6));
}

TEST_CASE("adam and amsgrad match a hand-rolled recursion") {
  for (bool ams : {false, true}) {
    AdamConfig config;
    config.lr = 0.02;
    config.beta1 = 0.8;
    config.beta2 = 0.95;
    config.eps = 1e-6;
    config.amsgrad = ams;
    AdamState state(2);
    ParamVector theta{0.5, 0.5};
    double th[2] = {0.5, 0.5}, m[2] = {0, 0}, v[2] = {0, 0}, vmax[2] = {0, 0};
    int t = 0;
    for (const auto& g : random_gradients(ams ? 4 : 5, 30, 2)) {
      adam_step(state, config, theta, grad_of(g));
      ++t;
      for (int i = 0; i < 2; ++i) {
        m[i] = 0.8 * m[i] + 0.2 * g[i];
        v[i] = 0.95 * v[i] + 0.05 * g[i] * g[i];
        vmax[i] = std::max(vmax[i], v[i]);
        const double mh = m[i] / (1.0 - std::pow(0.8, t));
        const double vh = (ams ? vmax[i] : v[i]) / (1.0 - std::pow(0.95, t));
        th[i] -= 0.02 * mh / (std::sqrt(vh) + 1e-6);
      }
    }
    for (int i = 0; i < 2; ++i) CHECK(theta[i] == doctest::Approx(th[i]).epsilon(1e-12));
  }
}

TEST_CASE("adapnm recovers adam and amsgrad") {
  for (bool ams : {true, false}) {
    AdamConfig adam;
    adam.lr = 0.01;
    adam.beta1 = 0.9;
    adam.amsgrad = ams;
    const AdaPnmConfig ada = adapnm_recovering_adam(adam);
    CHECK(ada.amsgrad == ams);
    AdamState as(4);
    AdaPnmState ps(4);
    ParamVector a = ParamVector::zeros(4), b = ParamVector::zeros(4);
    for (const auto& g : random_gradients(ams ? 8 : 9, 100, 4)) {
      adam_step(as, adam, a, grad_of(g));
      adapnm_step(ps, ada, b, grad_of(g));
    }
    CHECK((a.values() - b.values()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("l2 weight decay adds lambda theta to the gradient") {
  HbConfig config = HbConfig::sgd(0.1);
  config.weight_decay = {WeightDecayMode::kL2, 0.5};
  HbState state(1);
  ParamVector theta{2.0};
  hb_step(state, config, theta, grad_of(Vector{{1.0}}));
  // effective gradient 1 + 0.5*2 = 2
  CHECK(theta[0] == doctest::Approx(1.8));
  CHECK(state.effective_gradient[0] == doctest::Approx(2.0));
}

TEST_CASE("decoupled weight decay shrinks parameters with the base lr") {
  PnmConfig config;
  config.lr = 0.1;
  config.beta0 = 1.0;
  config.weight_decay = {WeightDecayMode::kDecoupled, 0.5};
  PnmState state(1);
  ParamVector theta{2.0};
  pnm_step(state, config, theta, grad_of(Vector{{0.0}}));
  // zero gradient: only the decay acts, theta -= 0.1 * 0.5 * 2
  CHECK(theta[0] == doctest::Approx(1.9));
}

TEST_CASE("weight decay helpers") {
  Vector theta{{1.0, -2.0}};
  Vector grad{{0.0, 0.0}};
  apply_weight_decay({WeightDecayMode::kL2, 0.1}, DecayPhase::kParameters, 1.0, theta, grad);
  CHECK(theta[0] == 1.0);
  apply_weight_decay({WeightDecayMode::kL2, 0.1}, DecayPhase::kGradient, 1.0, theta, grad);
  CHECK(grad[1] == doctest::Approx(-0.2));
  CHECK_THROWS_AS(WeightDecaySpec({WeightDecayMode::kL2, -1.0}).validate(), ConfigError);
  CHECK(parse_weight_decay_mode("decoupled") == WeightDecayMode::kDecoupled);
  CHECK(to_string(WeightDecayMode::kNone) == "none");
  CHECK_THROWS_AS(parse_weight_decay_mode("l1"), ConfigError);
}

TEST_CASE("invalid hyperparameters are config errors") {
  CHECK_THROWS_AS(HbConfig({-0.1, 0.9, 1.0, {}}).validate(), ConfigError);
  CHECK_THROWS_AS(HbConfig({0.1, 1.0, 1.0, {}}).validate(), ConfigError);
  PnmConfig p;
  p.beta0 = -1.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.beta0 = 1.0;
  p.lr = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(p.validate(), ConfigError);
  AdamConfig a;
  a.beta2 = 1.0;
  CHECK_THROWS_AS(a.validate(), ConfigError);
  CHECK_THROWS_AS(make_optimizer(OptimizerSpec{p}, 2), ConfigError);
}

TEST_CASE("steps reject mismatched and non-finite gradients") {
  PnmState state(2);
  ParamVector theta{0.0, 0.0};
  CHECK_THROWS_AS(pnm_step(state, PnmConfig{}, theta, grad_of(Vector::Zero(3))), DimensionError);
  Vector bad{{1.0, std::numeric_limits<double>::infinity()}};
  pnm_step(state, PnmConfig{}, theta, grad_of(Vector::Zero(2)));
  try {
    pnm_step(state, PnmConfig{}, theta, grad_of(bad));
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("optimizer wrapper dispatches and changes learning rates") {
  auto opt = make_optimizer(OptimizerSpec{PnmConfig{}}, 2);
  CHECK(opt->name() == "pnm");
  ParamVector theta{1.0, 1.0};
  opt->step(theta, grad_of(Vector::Ones(2)));
  CHECK(opt->steps_taken() == 1);
  opt->set_learning_rate(0.5);
  CHECK(opt->learning_rate() == 0.5);
  CHECK_THROWS_AS(opt->set_learning_rate(-1.0), ConfigError);
  CHECK(opt->learning_rate() == 0.5);
  const OptimizerSpec s = with_learning_rate(OptimizerSpec{AdamConfig{}}, 0.3);
  CHECK(learning_rate(s) == 0.3);
  AdamConfig ams;
  ams.amsgrad = true;
  CHECK(optimizer_name(OptimizerSpec{ams}) == "amsgrad");
  CHECK(optimizer_name(OptimizerSpec{AdaPnmConfig{}}) == "adapnm");
  const auto wd = weight_decay(with_weight_decay(s, {WeightDecayMode::kDecoupled, 0.1}));
  CHECK(wd.mode == WeightDecayMode::kDecoupled);
}

TEST_CASE("reformulated iterates satisfy their recursions along a stochastic pnm run") {
  RngStream rng(23);
  const auto model = problems::QuadraticModel::random_spd(Vector{{0.5, 1.0, 2.0}}, rng, Vector::Zero(3));
  PnmConfig config;
  config.lr = 0.05;
  config.beta0 = 1.0;
  config.beta1 = 0.9;
  config.weight_decay = {WeightDecayMode::kL2, 0.01};
  PnmState state(3);
  ParamVector theta{1.0, -1.0, 0.5};
  PnmReformulation reform(config, theta.values());
  double worst_rec = 0.0, worst_avg = 0.0;
  for (int t = 0; t < 300; ++t) {
    GradientSample g = model.full(theta.values());
    Vector noise(3);
    rng.fill_normal(noise);
    g.gradient += noise;
    pnm_step(state, config, theta, g);
    const auto r = reform.observe(theta.values(), state);
    worst_rec = std::max(worst_rec, r.recursion);
    worst_avg = std::max(worst_avg, r.averaged);
  }
  CHECK(worst_rec < 1e-12);
  CHECK(worst_avg < 1e-12);
  PnmConfig decoupled = config;
  decoupled.weight_decay = {WeightDecayMode::kDecoupled, 0.01};
  CHECK_THROWS_AS(PnmReformulation(decoupled, theta.values()), ConfigError);
}
