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

#include "pnm/problems/label_noise.hpp"

#include <string>

#include "pnm/core/error.hpp"

namespace pnm::problems {

void LabelNoiseSpec::validate() const {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ConfigError("label noise rate must lie in [0, 1), got " + std::to_string(rate));
  }
}

std::vector<std::size_t> CorruptedDataset::clean_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < flipped.size(); ++i)
    if (!flipped[i]) rows.push_back(i);
  return rows;
}

std::vector<std::size_t> CorruptedDataset::flipped_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < flipped.size(); ++i)
    if (flipped[i]) rows.push_back(i);
  return rows;
}

CorruptedDataset apply_label_noise(const FiniteDataset& data, const LabelNoiseSpec& spec,
                                   RngStream& rng) {
  spec.validate();
  if (data.num_classes < 2) throw ConfigError("label noise needs a classification dataset");
  CorruptedDataset out{data, std::vector<bool>(data.size(), false)};
  if (spec.rate == 0.0) return out;
  const auto k = static_cast<std::uint64_t>(data.num_classes);
  for (std::size_t i = 0; i < data.size(); ++i) {
    // One uniform per row regardless of outcome keeps the stream aligned.
    const bool flip = rng.uniform() < spec.rate;
    if (!flip) continue;
    const auto y = static_cast<std::uint64_t>(data.label_class(i));
    const std::uint64_t next = spec.kind == LabelNoiseKind::kAsymmetric
                                   ? (y + 1) % k
                                   : (y + 1 + rng.uniform_index(k - 1)) % k;
    out.data.labels[i] = static_cast<double>(next);
    out.flipped[i] = true;
  }
  return out;
}

std::string_view to_string(LabelNoiseKind kind) {
  return kind == LabelNoiseKind::kSymmetric ? "symmetric" : "asymmetric";
}

LabelNoiseKind parse_label_noise_kind(std::string_view name) {
  if (name == "symmetric") return LabelNoiseKind::kSymmetric;
  if (name == "asymmetric") return LabelNoiseKind::kAsymmetric;
  throw ConfigError("unknown label noise kind '" + std::string(name) + "'");
}

}  // namespace pnm::problems
