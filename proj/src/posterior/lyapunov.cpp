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

#include "pnm/posterior/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pnm/core/error.hpp"
#include "pnm/noise/amplification.hpp"

namespace pnm::posterior {
namespace {

void require_symmetric(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(what) + " must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DimensionError(std::string(what) + " must be symmetric");
  }
}

}  // namespace

double lyapunov_residual(const Matrix& sigma, const Matrix& hessian, const Matrix& scaled_noise) {
  require_symmetric(sigma, "covariance");
  require_symmetric(hessian, "Hessian");
  if (sigma.rows() != hessian.rows() || scaled_noise.rows() != hessian.rows() ||
      scaled_noise.cols() != hessian.cols()) {
    throw DimensionError("lyapunov_residual: dimension mismatch");
  }
  const Matrix lhs = sigma * hessian + hessian * sigma;
  const double num = (lhs - scaled_noise).norm();
  const double den = scaled_noise.norm();
  if (den == 0.0) {
    if (num == 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return num / den;
}

std::string to_string(PosteriorKind kind) {
  switch (kind) {
    case PosteriorKind::kSgd: return "sgd";
    case PosteriorKind::kHb: return "hb";
    case PosteriorKind::kPnm: return "pnm";
  }
  return "unknown";
}

PosteriorKind parse_posterior_kind(const std::string& name) {
  if (name == "sgd") return PosteriorKind::kSgd;
  if (name == "hb") return PosteriorKind::kHb;
  if (name == "pnm") return PosteriorKind::kPnm;
  throw ConfigError("unknown posterior kind '" + name + "' (expected sgd, hb or pnm)");
}

double theoretical_posterior_covariance(PosteriorKind kind, double lr, std::size_t batch,
                                        double beta0) {
  if (batch == 0) throw ConfigError("batch size must be >= 1");
  if (!(lr > 0.0)) throw ConfigError("learning rate must be > 0");
  const double base = lr / (2.0 * static_cast<double>(batch));
  if (kind == PosteriorKind::kPnm) return noise::amplification_factor(beta0) * base;
  return base;
}

}  // namespace pnm::posterior
