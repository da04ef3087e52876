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

#include "pnm/problems/dataset.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "pnm/core/error.hpp"

namespace pnm::problems {

void FiniteDataset::validate() const {
  if (labels.empty()) throw ConfigError("dataset is empty");
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw DimensionError("dataset: " + std::to_string(features.rows()) + " feature rows but " +
                         std::to_string(labels.size()) + " labels");
  }
  if (features.cols() < 1) throw DimensionError("dataset: no feature columns");
  if (!features.allFinite()) throw NumericalError("dataset: non-finite feature");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double y = labels[i];
    if (!std::isfinite(y)) throw NumericalError("dataset: non-finite label at row " + std::to_string(i));
    if (num_classes > 0 &&
        (y < 0 || y != std::floor(y) || y >= static_cast<double>(num_classes))) {
      throw ConfigError("dataset: label " + std::to_string(y) + " at row " + std::to_string(i) +
                        " is not a class index below " + std::to_string(num_classes));
    }
  }
}

FiniteDataset FiniteDataset::subset(std::span<const std::size_t> indices) const {
  FiniteDataset out;
  out.num_classes = num_classes;
  out.features.resize(static_cast<Eigen::Index>(indices.size()), features.cols());
  out.labels.reserve(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    out.features.row(static_cast<Eigen::Index>(r)) =
        features.row(static_cast<Eigen::Index>(indices[r]));
    out.labels.push_back(labels.at(indices[r]));
  }
  return out;
}

std::vector<std::size_t> sample_batch(std::size_t n, std::size_t batch, RngStream& rng) {
  if (batch == 0 || batch > n) {
    throw ConfigError("batch size must lie in [1, N]; got B=" + std::to_string(batch) +
                      ", N=" + std::to_string(n));
  }
  std::vector<std::size_t> out;
  out.reserve(batch);
  if (batch == n) {
    out.resize(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  // Floyd's algorithm: O(B) draws, output in insertion order.
  std::unordered_set<std::size_t> taken;
  taken.reserve(batch * 2);
  for (std::size_t j = n - batch; j < n; ++j) {
    const auto t = static_cast<std::size_t>(rng.uniform_index(j + 1));
    const std::size_t pick = taken.insert(t).second ? t : j;
    if (pick == j) taken.insert(j);
    out.push_back(pick);
  }
  return out;
}

}  // namespace pnm::problems
