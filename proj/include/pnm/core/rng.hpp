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

#ifndef PNM_CORE_RNG_HPP
#define PNM_CORE_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "pnm/core/param_vector.hpp"

namespace pnm {

/// Identifier written into every output file. The bit stream is MT19937-64
/// (fully specified by the C++ standard), seeded with the raw 64-bit seed.
/// Uniform doubles take the top 53 bits; normals use the Marsaglia polar
/// method with the second variate cached; bounded integers use rejection on
/// the raw 64-bit output. None of this depends on the standard library's
/// implementation-defined distributions.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53/polar-normal/v1";

/// Seeded pseudo-random stream. Single owner; not thread-safe.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  static constexpr std::string_view algorithm() noexcept { return kRngAlgorithm; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer on [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);
  double normal();
  /// Fills `out` with i.i.d. standard normal draws.
  void fill_normal(Vector& out);

  /// A statistically independent stream identified by `stream_id`. The parent
  /// state is not consumed.
  RngStream derive(std::uint64_t stream_id) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to derive child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream_id) noexcept;

ParamVector sample_standard_gaussian(RngStream& rng, std::size_t dim);

}  // namespace pnm

#endif  // PNM_CORE_RNG_HPP
