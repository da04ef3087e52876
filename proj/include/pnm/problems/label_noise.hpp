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

#ifndef PNM_PROBLEMS_LABEL_NOISE_HPP
#define PNM_PROBLEMS_LABEL_NOISE_HPP

#include <string_view>
#include <vector>

#include "pnm/core/rng.hpp"
#include "pnm/problems/dataset.hpp"

namespace pnm::problems {

enum class LabelNoiseKind { kSymmetric, kAsymmetric };

/// Symmetric: with probability `rate` a label moves to a uniformly chosen
/// other class. Asymmetric: with probability `rate` class i becomes (i+1) mod K.
struct LabelNoiseSpec {
  LabelNoiseKind kind = LabelNoiseKind::kSymmetric;
  double rate = 0.0;

  void validate() const;
};

struct CorruptedDataset {
  FiniteDataset data;
  std::vector<bool> flipped;  // true where the label was altered

  std::vector<std::size_t> clean_rows() const;
  std::vector<std::size_t> flipped_rows() const;
};

CorruptedDataset apply_label_noise(const FiniteDataset& data, const LabelNoiseSpec& spec,
                                   RngStream& rng);

std::string_view to_string(LabelNoiseKind kind);
LabelNoiseKind parse_label_noise_kind(std::string_view name);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_LABEL_NOISE_HPP
