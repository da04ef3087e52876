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

#ifndef PNM_CORE_ORACLE_HPP
#define PNM_CORE_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "pnm/core/param_vector.hpp"
#include "pnm/core/rng.hpp"

namespace pnm {

/// Source of full and stochastic gradients.
///
/// Oracles are read-only after construction; every stochastic draw comes from
/// the caller's RngStream, so one oracle can serve concurrent runs.
class GradientOracle {
 public:
  virtual ~GradientOracle() = default;

  virtual std::size_t dim() const = 0;

  virtual bool has_full_gradient() const { return true; }
  virtual bool has_hessian() const { return false; }
  /// N for finite-dataset oracles.
  virtual std::optional<std::size_t> dataset_size() const { return std::nullopt; }
  /// B for minibatch oracles.
  virtual std::optional<std::size_t> batch_size() const { return std::nullopt; }
  /// Upper bound on E||g - grad f||^2 when the oracle knows it.
  virtual std::optional<double> noise_second_moment() const { return std::nullopt; }

  /// Loss and exact gradient. Throws ConfigError when unsupported.
  virtual void full(const Vector& theta, GradientSample& out) const = 0;
  /// Loss (when cheap) and a stochastic gradient.
  virtual void stochastic(const Vector& theta, RngStream& rng,
                          GradientSample& out) const = 0;
  /// Throws ConfigError unless has_hessian().
  virtual Matrix hessian(const Vector& theta) const;

  GradientSample full(const Vector& theta) const;
  GradientSample stochastic(const Vector& theta, RngStream& rng) const;
  double loss(const Vector& theta) const;
};

}  // namespace pnm

#endif  // PNM_CORE_ORACLE_HPP
