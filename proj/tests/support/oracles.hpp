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

#ifndef PNM_TESTS_SUPPORT_ORACLES_HPP
#define PNM_TESTS_SUPPORT_ORACLES_HPP

// Reference values computed independently of the library: closed forms,
// exact linear-system solves and plain loops. Nothing here calls into the
// code under test.

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Stationary variance of theta <- (1 - lr h) theta + lr sigma xi.
double sgd_ou_variance(double lr, double h, double sigma2);

/// Exact time-averaged stationary variance of theta for the PNM recursion
/// on f = h theta^2 / 2 with additive N(0, sigma2) gradient noise, where the
/// pair is scaled by `step`:
///   m_t = b m_{t-2} + (1 - b) g_t,  b = beta1^2
///   theta -= step ((1 + beta0) m_t - beta0 m_{t-1}).
/// Solved as a period-two discrete Lyapunov equation via Kronecker products.
double pnm_stationary_variance(double step, double beta0, double beta1, double h, double sigma2);

/// Same for heavy ball m = beta1 m + beta3 g, theta -= lr m.
double hb_stationary_variance(double lr, double beta1, double beta3, double h, double sigma2);

/// Solves S = A S A^T + Q for S (vectorized).
Mat discrete_lyapunov(const Mat& a, const Mat& q);

/// KL(N(mq, sq2) || N(mp, sp2)) in one dimension.
double kl_1d(double mq, double sq2, double mp, double sp2);

/// Five-point stencil derivative.
double derivative(const std::function<double(double)>& f, double x, double h);

/// Mean and population std by two passes.
std::pair<double, double> mean_pop_std(const std::vector<double>& xs);

/// Sum of squared geometric weights: sum_{k=0}^{t} (beta3 beta1^k)^2 sigma2.
double squared_weight_sum(double beta1, double beta3, double sigma2, std::int64_t t);

}  // namespace oracle

#endif  // PNM_TESTS_SUPPORT_ORACLES_HPP
