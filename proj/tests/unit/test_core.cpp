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
#include <set>
#include <stdexcept>
#include <vector>

#include "pnm/core/error.hpp"
#include "pnm/core/oracle.hpp"
#include "pnm/core/parallel.hpp"
#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/core/trajectory.hpp"

using namespace pnm;

TEST_CASE("param vector rejects empty and non-finite input") {
  CHECK_THROWS_AS(static_cast<void>(ParamVector(Vector())), DimensionError);
  Vector bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(static_cast<void>(ParamVector(bad)), NumericalError);
  bad[1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(static_cast<void>(ParamVector(bad)), NumericalError);
  const ParamVector ok{1.0, 2.0, 3.0};
  CHECK(ok.size() == 3);
  CHECK(ok[2] == 3.0);
  CHECK(ParamVector::zeros(4).values().isZero(0.0));
}

TEST_CASE("dot checks dimensions") {
  const ParamVector a{1.0, 2.0};
  const ParamVector b{3.0, 4.0};
  CHECK(dot(a, b) == 11.0);
  CHECK_THROWS_AS(dot(a, ParamVector{1.0}), DimensionError);
}

TEST_CASE("rng streams are reproducible and seed-dependent") {
  RngStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
  }
  RngStream d(42);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += d.next_u64() == c.next_u64();
  CHECK(same == 0);
  CHECK(RngStream::algorithm() == kRngAlgorithm);
}

TEST_CASE("uniform draws stay in [0, 1) with the right moments") {
  RngStream rng(7);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // standard errors: sqrt(1/12/n) ~ 6.5e-4 for the mean
  CHECK(std::abs(mean - 0.5) < 4 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(var - 1.0 / 12.0) < 0.002);
}

TEST_CASE("normal draws have unit variance and zero mean") {
  RngStream rng(11);
  const int n = 400000;
  double sum = 0.0, sum_sq = 0.0, sum4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
    sum4 += z * z * z * z;
  }
  CHECK(std::abs(sum / n) < 4.0 / std::sqrt(n));
  CHECK(std::abs(sum_sq / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(sum4 / n - 3.0) < 4.0 * std::sqrt(96.0 / n));
}

TEST_CASE("uniform_index covers the range evenly") {
  RngStream rng(3);
  const std::uint64_t k = 7;
  const int n = 70000;
  std::vector<int> counts(k, 0);
  for (int i = 0; i < n; ++i) {
    const auto j = rng.uniform_index(k);
    REQUIRE(j < k);
    ++counts[j];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(n) / k;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 6 degrees of freedom; 99.9th percentile is 22.46
  CHECK(chi2 < 22.46);
  CHECK_THROWS_AS(rng.uniform_index(0), ConfigError);
}

TEST_CASE("derive leaves the parent untouched and gives distinct streams") {
  RngStream parent(5);
  RngStream twin(5);
  RngStream c1 = parent.derive(1);
  RngStream c2 = parent.derive(2);
  RngStream c1b = parent.derive(1);
  CHECK(parent.next_u64() == twin.next_u64());
  const auto x = c1.next_u64();
  CHECK(x == c1b.next_u64());
  CHECK(x != c2.next_u64());
  CHECK(mix_seed(5, 1) != mix_seed(5, 2));
  CHECK(mix_seed(5, 1) != mix_seed(6, 1));
}

TEST_CASE("fill_normal and sample_standard_gaussian") {
  RngStream a(9), b(9);
  Vector v(5);
  a.fill_normal(v);
  const ParamVector p = sample_standard_gaussian(b, 5);
  CHECK((v - p.values()).norm() == 0.0);
  CHECK_THROWS_AS(sample_standard_gaussian(a, 0), DimensionError);
}

TEST_CASE("trajectory steps start at zero and strictly increase") {
  Trajectory t(1, "abc");
  CHECK(t.empty());
  CHECK_THROWS_AS(t.append({3, 0.0, 0.0, std::nullopt, std::nullopt}), ConfigError);
  t.append({0, 1.0, 2.0, std::nullopt, std::nullopt});
  t.append({5, 0.5, 1.0, 0.25, std::nullopt});
  CHECK_THROWS_AS(t.append({5, 0.0, 0.0, std::nullopt, std::nullopt}), ConfigError);
  CHECK_THROWS_AS(t.append({4, 0.0, 0.0, std::nullopt, std::nullopt}), ConfigError);
  CHECK(t.records().size() == 2);
  CHECK(t.back().test_error.value() == 0.25);
  CHECK(t.config_digest() == "abc");
  CHECK(t.seed() == 1);
}

namespace {

class Linear final : public GradientOracle {
 public:
  std::size_t dim() const override { return 2; }
  using GradientOracle::full;
  using GradientOracle::stochastic;
  void full(const Vector& theta, GradientSample& out) const override {
    out.gradient = Vector::Ones(2);
    out.loss = theta.sum();
  }
  void stochastic(const Vector& theta, RngStream&, GradientSample& out) const override {
    full(theta, out);
  }
};

}  // namespace

TEST_CASE("oracle defaults") {
  Linear f;
  CHECK(f.has_full_gradient());
  CHECK_FALSE(f.has_hessian());
  CHECK_FALSE(f.dataset_size().has_value());
  CHECK_THROWS_AS(f.hessian(Vector::Zero(2)), ConfigError);
  CHECK(f.loss(Vector::Ones(2)) == 2.0);
  RngStream rng(1);
  CHECK(f.stochastic(Vector::Zero(2), rng).gradient.sum() == 2.0);
}

TEST_CASE("parallel_for fills every slot regardless of thread count") {
  for (std::size_t threads : {0u, 1u, 3u, 8u}) {
    std::vector<int> out(50, -1);
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  }
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  for (std::size_t threads : {1u, 4u}) {
    try {
      parallel_for(20, threads, [](std::size_t i) {
        if (i == 7 || i == 13) throw std::runtime_error("job " + std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "job 7");
    }
  }
}
