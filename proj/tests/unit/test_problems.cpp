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

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>
#include <vector>

#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/problems/csv.hpp"
#include "pnm/problems/dataset.hpp"
#include "pnm/problems/dataset_problems.hpp"
#include "pnm/problems/gradient_check.hpp"
#include "pnm/problems/label_noise.hpp"
#include "pnm/problems/noise_oracles.hpp"
#include "pnm/problems/quadratic.hpp"
#include "pnm/problems/rosenbrock.hpp"
#include "pnm/problems/tiny_mlp.hpp"
#include "pnm/problems/two_moons.hpp"

using namespace pnm;
using namespace pnm::problems;

namespace {

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return rows;
}

FiniteDataset small_regression(RngStream& rng, std::size_t n, std::size_t d) {
  FiniteDataset data;
  data.features = Matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < data.features.size(); ++i) data.features.data()[i] = rng.normal();
  for (std::size_t i = 0; i < n; ++i) data.labels.push_back(rng.normal());
  return data;
}

}  // namespace

TEST_CASE("rosenbrock values at known points") {
  Rosenbrock r;
  auto [f1, g1] = rosenbrock_eval(Vector{{1.0, 1.0}});
  CHECK(f1 == 0.0);
  CHECK(g1.norm() == 0.0);
  auto [f, g] = rosenbrock_eval(Vector{{-1.2, 1.0}});
  CHECK(f == doctest::Approx(24.2));
  CHECK(g[0] == doctest::Approx(-215.6));
  CHECK(g[1] == doctest::Approx(-88.0));
  CHECK(fd_gradient_check(r, Vector{{0.3, -0.4}}, 1e-5) < 1e-6);
}

TEST_CASE("rosenbrock hessian matches differences of the gradient") {
  Rosenbrock r;
  const Vector theta{{-0.7, 0.9}};
  const Matrix h = r.hessian(theta);
  const double step = 1e-6;
  for (Eigen::Index j = 0; j < 2; ++j) {
    Vector up = theta, down = theta;
    up[j] += step;
    down[j] -= step;
    const Vector col = (rosenbrock_eval(up).second - rosenbrock_eval(down).second) / (2 * step);
    CHECK((col - h.col(j)).norm() < 1e-4);
  }
}

TEST_CASE("random spd quadratic has the requested spectrum") {
  RngStream rng(3);
  const Vector eig{{0.5, 1.0, 4.0}};
  const Vector minimum{{1.0, 2.0, 3.0}};
  const auto q = QuadraticModel::random_spd(eig, rng, minimum);
  Eigen::SelfAdjointEigenSolver<Matrix> es(q.hessian_matrix());
  CHECK((es.eigenvalues() - eig).norm() < 1e-12);
  CHECK(q.min_eigenvalue() == doctest::Approx(0.5));
  CHECK(q.max_eigenvalue() == doctest::Approx(4.0));
  CHECK(q.loss(minimum) == doctest::Approx(0.0));
  CHECK(fd_gradient_check(q, Vector{{0.1, -0.2, 0.3}}, 1e-5) < 1e-8);
  const Matrix o = random_orthogonal(4, rng);
  CHECK((o.transpose() * o - Matrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("quadratic rejects bad hessians") {
  Matrix asym(2, 2);
  asym << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(QuadraticModel(ParamVector{0.0, 0.0}, asym), ConfigError);
  CHECK_THROWS_AS(QuadraticModel(ParamVector{0.0, 0.0}, -Matrix::Identity(2, 2)), ConfigError);
  CHECK_THROWS_AS(QuadraticModel(ParamVector{0.0}, Matrix::Identity(2, 2)), DimensionError);
}

TEST_CASE("additive noise has the requested covariance") {
  auto base = std::make_shared<QuadraticModel>(ParamVector{0.0, 0.0}, Matrix::Identity(2, 2));
  Matrix c(2, 2);
  c << 2.0, 0.6, 0.6, 1.0;
  AdditiveNoiseOracle oracle(base, c);
  CHECK(*oracle.noise_second_moment() == doctest::Approx(3.0));
  RngStream rng(5);
  const Vector theta{{1.0, -1.0}};
  Matrix acc = Matrix::Zero(2, 2);
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const Vector e = oracle.stochastic(theta, rng).gradient - theta;
    acc.noalias() += e * e.transpose();
  }
  acc /= n;
  CHECK((acc - c).cwiseAbs().maxCoeff() < 0.03);
  const Matrix root = psd_sqrt(c);
  CHECK((root * root - c).norm() < 1e-12);
  CHECK_THROWS_AS(psd_sqrt(-Matrix::Identity(2, 2)), ConfigError);
}

TEST_CASE("pure and bounded noise oracles") {
  PureNoiseOracle pure(3, 0.5);
  CHECK(*pure.noise_second_moment() == doctest::Approx(1.5));
  CHECK(pure.full(Vector::Ones(3)).gradient.norm() == 0.0);
  auto base = std::make_shared<Rosenbrock>();
  BoundedNoiseOracle bounded(base, 0.5);
  RngStream rng(9);
  const Vector theta{{0.0, 0.0}};
  const Vector clean = base->full(theta).gradient;
  double sum_sq = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const Vector e = bounded.stochastic(theta, rng).gradient - clean;
    CHECK(e.cwiseAbs().maxCoeff() <= 0.5);
    sum_sq += e.squaredNorm();
  }
  // uniform on [-a, a] has variance a^2/3 per coordinate
  CHECK(sum_sq / 100000 == doctest::Approx(2 * 0.25 / 3).epsilon(0.02));
  CHECK(*bounded.noise_second_moment() == doctest::Approx(2 * 0.25 / 3));
}

TEST_CASE("least squares gradients and normal equations") {
  RngStream rng(11);
  const auto data = small_regression(rng, 40, 3);
  LeastSquares ls(3);
  const Vector theta{{0.2, -0.1, 0.4}};
  Vector grad;
  const auto rows = all_rows(40);
  ls.evaluate(theta, data, rows, &grad);
  const auto loss = [&](const Vector& t) { return ls.evaluate(t, data, rows, nullptr); };
  CHECK(fd_gradient_check(loss, grad, theta, 1e-5) < 1e-8);
  const Vector sol = LeastSquares::solve(data);
  Vector g_sol;
  ls.evaluate_all(sol, data, &g_sol);
  CHECK(g_sol.norm() < 1e-10);
  const Matrix h = LeastSquares::hessian(data);
  CHECK((h - data.features.transpose() * data.features / 40.0).norm() < 1e-12);
}

TEST_CASE("logistic regression gradient and stability") {
  RngStream rng(12);
  auto data = make_two_moons(60, 0.1, rng);
  LogisticRegression lr(2);
  CHECK(lr.dim() == 3);
  const Vector theta{{0.5, -1.0, 0.2}};
  Vector grad;
  const auto rows = all_rows(60);
  lr.evaluate(theta, data, rows, &grad);
  const auto loss = [&](const Vector& t) { return lr.evaluate(t, data, rows, nullptr); };
  CHECK(fd_gradient_check(loss, grad, theta, 1e-5) < 1e-8);
  const double big = lr.evaluate(Vector{{800.0, -800.0, 0.0}}, data, rows, &grad);
  CHECK(std::isfinite(big));
  CHECK(grad.allFinite());
  CHECK(lr.evaluate(Vector::Zero(3), data, rows, nullptr) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("tiny mlp gradient matches finite differences") {
  RngStream rng(13);
  const auto data = make_two_moons(30, 0.1, rng);
  TinyMlp mlp(2, 5, 2);
  CHECK(mlp.dim() == 5 * 2 + 5 + 2 * 5 + 2);
  const Vector theta = mlp.initial_weights(rng);
  const auto rows = all_rows(30);
  Vector grad;
  mlp.evaluate(theta, data, rows, &grad);
  const auto loss = [&](const Vector& t) { return mlp.evaluate(t, data, rows, nullptr); };
  CHECK(fd_gradient_check(loss, grad, theta, 1e-5) < 1e-6);
  const double err = mlp.classification_error(theta, data);
  CHECK(err >= 0.0);
  CHECK(err <= 1.0);
  CHECK_THROWS_AS(TinyMlp(2, 5, 1), ConfigError);
}

TEST_CASE("minibatch gradient is unbiased over batches") {
  RngStream rng(14);
  const auto data = std::make_shared<FiniteDataset>(small_regression(rng, 20, 2));
  auto problem = std::make_shared<LeastSquares>(2);
  DatasetOracle oracle(problem, data, 5);
  const Vector theta{{0.3, 0.7}};
  const Vector full = oracle.full(theta).gradient;
  Vector acc = Vector::Zero(2);
  const int n = 40000;
  for (int i = 0; i < n; ++i) acc += oracle.stochastic(theta, rng).gradient;
  CHECK((acc / n - full).norm() < 0.02 * (1.0 + full.norm()));
  DatasetOracle whole = oracle.with_batch(20);
  CHECK((whole.stochastic(theta, rng).gradient - full).norm() < 1e-12);
  CHECK_THROWS_AS(DatasetOracle(problem, data, 21), ConfigError);
}

TEST_CASE("sample_batch draws distinct in-range rows") {
  RngStream rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    auto rows = sample_batch(30, 10, rng);
    CHECK(rows.size() == 10);
    std::sort(rows.begin(), rows.end());
    CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
    CHECK(rows.back() < 30);
  }
  CHECK_THROWS_AS(sample_batch(5, 0, rng), ConfigError);
  CHECK_THROWS_AS(sample_batch(5, 6, rng), ConfigError);
}

TEST_CASE("two moons is balanced and labelled") {
  RngStream rng(16);
  const auto data = make_two_moons(101, 0.0, rng);
  CHECK(data.size() == 101);
  CHECK(data.num_classes == 2);
  const double ones = std::accumulate(data.labels.begin(), data.labels.end(), 0.0);
  CHECK(ones == 51.0);
  data.validate();
  CHECK_THROWS_AS(make_two_moons(1, 0.1, rng), ConfigError);
}

TEST_CASE("label noise at rate zero is the identity") {
  RngStream rng(17);
  const auto data = make_two_moons(200, 0.1, rng);
  const auto out = apply_label_noise(data, {LabelNoiseKind::kSymmetric, 0.0}, rng);
  CHECK(out.data.labels == data.labels);
  CHECK(out.flipped_rows().empty());
  CHECK(out.clean_rows().size() == 200);
}

TEST_CASE("symmetric label noise flips about the requested fraction") {
  RngStream rng(18);
  const auto data = make_two_moons(20000, 0.1, rng);
  const auto out = apply_label_noise(data, {LabelNoiseKind::kSymmetric, 0.3}, rng);
  const double frac = static_cast<double>(out.flipped_rows().size()) / 20000.0;
  CHECK(frac == doctest::Approx(0.3).epsilon(0.05));
  for (std::size_t i : out.flipped_rows()) CHECK(out.data.labels[i] != data.labels[i]);
  for (std::size_t i : out.clean_rows()) CHECK(out.data.labels[i] == data.labels[i]);
  CHECK_THROWS_AS(LabelNoiseSpec({LabelNoiseKind::kSymmetric, 1.5}).validate(), ConfigError);
  CHECK(parse_label_noise_kind("asymmetric") == LabelNoiseKind::kAsymmetric);
}

TEST_CASE("csv parsing") {
  std::istringstream good("x1,x2,y\n1.0,2.0,0\n3.0,4.0,1\n");
  const auto data = parse_csv_dataset(good, true);
  CHECK(data.size() == 2);
  CHECK(data.features(1, 0) == 3.0);
  CHECK(data.num_classes == 2);
  std::istringstream ragged("1,2,0\n3,1\n");
  CHECK_THROWS_AS(parse_csv_dataset(ragged, true), IoError);
  std::istringstream text("1,abc,0\n");
  CHECK_THROWS_AS(parse_csv_dataset(text, false), IoError);
  CHECK_THROWS_AS(load_csv_dataset("/nonexistent/file.csv", false), IoError);
}

TEST_CASE("dataset validation") {
  FiniteDataset bad;
  bad.features = Matrix::Zero(3, 2);
  bad.labels = {0.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), DimensionError);
  FiniteDataset empty;
  CHECK_THROWS_AS(empty.validate(), ConfigError);
}
