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

#ifndef PNM_PROBLEMS_DATASET_HPP
#define PNM_PROBLEMS_DATASET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"

namespace pnm::problems {

/// N x d features with one label per row. `num_classes` is 0 for regression
/// targets; otherwise labels hold class indices 0..K-1 stored as doubles.
struct FiniteDataset {
  Matrix features;
  std::vector<double> labels;
  std::size_t num_classes = 0;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t feature_dim() const noexcept { return static_cast<std::size_t>(features.cols()); }
  int label_class(std::size_t i) const { return static_cast<int>(labels[i]); }

  /// Throws on N = 0, shape mismatch, non-finite entries or bad class labels.
  void validate() const;
  FiniteDataset subset(std::span<const std::size_t> indices) const;
};

/// B distinct indices drawn uniformly from [0, N). B == N returns 0..N-1 in
/// order so that a full batch reproduces the full gradient bit-for-bit.
std::vector<std::size_t> sample_batch(std::size_t n, std::size_t batch, RngStream& rng);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_DATASET_HPP
