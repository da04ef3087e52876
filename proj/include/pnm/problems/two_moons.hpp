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

#ifndef PNM_PROBLEMS_TWO_MOONS_HPP
#define PNM_PROBLEMS_TWO_MOONS_HPP

#include <cstddef>

#include "pnm/core/rng.hpp"
#include "pnm/problems/dataset.hpp"

namespace pnm::problems {

/// Two interleaved half circles in the plane, shuffled. Class 0 (outer) has
/// n/2 points, class 1 (inner) the rest; isotropic Gaussian jitter with
/// standard deviation `noise` is added to every point.
FiniteDataset make_two_moons(std::size_t n, double noise, RngStream& rng);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_TWO_MOONS_HPP
