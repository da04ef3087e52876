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

#include "pnm/core/trajectory.hpp"

#include "pnm/core/error.hpp"

namespace pnm {

void Trajectory::append(TrajectoryRecord record) {
  if (records_.empty() ? record.step != 0 : record.step <= records_.back().step) {
    throw ConfigError("Trajectory: step indices must start at 0 and strictly increase");
  }
  records_.push_back(std::move(record));
}

}  // namespace pnm
