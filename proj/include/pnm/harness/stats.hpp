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

#ifndef PNM_HARNESS_STATS_HPP
#define PNM_HARNESS_STATS_HPP

#include <cstddef>
#include <vector>

namespace pnm::harness {

/// Mean and population standard deviation (divisor n) over seeds.
struct Summary {
  double mean = 0.0;
  double std = 0.0;
  std::size_t count = 0;
};

/// Throws ConfigError on an empty sample.
Summary summarize(const std::vector<double>& values);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_STATS_HPP
