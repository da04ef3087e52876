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

#include "pnm/problems/two_moons.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "pnm/core/error.hpp"

namespace pnm::problems {

FiniteDataset make_two_moons(std::size_t n, double noise, RngStream& rng) {
  if (n < 2) throw ConfigError("two moons: need at least 2 samples");
  if (!(noise >= 0.0)) throw ConfigError("two moons: noise must be >= 0");
  const std::size_t outer = n / 2;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[static_cast<std::size_t>(rng.uniform_index(i + 1))]);
  }

  FiniteDataset data;
  data.num_classes = 2;
  data.features.resize(static_cast<Eigen::Index>(n), 2);
  data.labels.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::numbers::pi * rng.uniform();
    const bool inner = i >= outer;
    double x = inner ? 1.0 - std::cos(t) : std::cos(t);
    double y = inner ? 0.5 - std::sin(t) : std::sin(t);
    x += noise * rng.normal();
    y += noise * rng.normal();
    const auto row = static_cast<Eigen::Index>(order[i]);
    data.features(row, 0) = x;
    data.features(row, 1) = y;
    data.labels[order[i]] = inner ? 1.0 : 0.0;
  }
  return data;
}

}  // namespace pnm::problems
