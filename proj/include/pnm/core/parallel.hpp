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

#ifndef PNM_CORE_PARALLEL_HPP
#define PNM_CORE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace pnm {

/// Calls body(i) for i in [0, count) on up to `threads` workers (0 or 1 runs
/// inline). Bodies must write only to their own slot of a pre-sized result.
/// If any body throws, the exception from the lowest index is rethrown after
/// all workers finish, so failures are reported deterministically.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace pnm

#endif  // PNM_CORE_PARALLEL_HPP
