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

#ifndef PNM_CORE_TRAJECTORY_HPP
#define PNM_CORE_TRAJECTORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnm/core/param_vector.hpp"

namespace pnm {

struct TrajectoryRecord {
  std::int64_t step = 0;
  double loss = 0.0;
  double grad_norm_sq = 0.0;
  std::optional<double> test_error;
  std::optional<Vector> snapshot;
};

/// Ordered record of a run. Step indices start at 0 and strictly increase.
class Trajectory {
 public:
  Trajectory(std::uint64_t seed, std::string config_digest)
      : seed_(seed), config_digest_(std::move(config_digest)) {}

  void append(TrajectoryRecord record);

  const std::vector<TrajectoryRecord>& records() const noexcept { return records_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::string& config_digest() const noexcept { return config_digest_; }
  bool empty() const noexcept { return records_.empty(); }
  const TrajectoryRecord& back() const { return records_.back(); }

 private:
  std::uint64_t seed_;
  std::string config_digest_;
  std::vector<TrajectoryRecord> records_;
};

}  // namespace pnm

#endif  // PNM_CORE_TRAJECTORY_HPP
