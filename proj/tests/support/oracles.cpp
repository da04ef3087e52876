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

#include "oracles.hpp"

#include <cmath>

namespace oracle {

double sgd_ou_variance(double lr, double h, double sigma2) {
  const double a = 1.0 - lr * h;
  return lr * lr * sigma2 / (1.0 - a * a);
}

Mat discrete_lyapunov(const Mat& a, const Mat& q) {
  const auto n = a.rows();
  Mat kron(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) kron.block(i * n, j * n, n, n) = a(i, j) * a;
  const Mat lhs = Mat::Identity(n * n, n * n) - kron;
  Vec rhs = Eigen::Map<const Vec>(q.data(), n * n);
  Vec s = lhs.fullPivLu().solve(rhs);
  return Eigen::Map<Mat>(s.data(), n, n);
}

namespace {

// One-step maps x' = M x + n xi with state (theta, slot_even, slot_odd).
void pnm_step_maps(double step, double beta0, double beta1, double h, int parity, Mat& m, Vec& n) {
  const double b = beta1 * beta1;
  m = Mat::Identity(3, 3);
  n = Vec::Zero(3);
  const int cur = parity == 0 ? 1 : 2;
  const int other = parity == 0 ? 2 : 1;
  // new current slot = b * cur + (1 - b) (h theta + xi)
  Mat m_slot = Mat::Identity(3, 3);
  m_slot.row(cur).setZero();
  m_slot(cur, cur) = b;
  m_slot(cur, 0) = (1.0 - b) * h;
  Vec n_slot = Vec::Zero(3);
  n_slot[cur] = 1.0 - b;
  // theta -= step ((1+beta0) cur - beta0 other), using the updated cur
  Mat m_theta = Mat::Identity(3, 3);
  m_theta(0, cur) = -step * (1.0 + beta0);
  m_theta(0, other) = step * beta0;
  m = m_theta * m_slot;
  n = m_theta * n_slot;
}

}  // namespace

double pnm_stationary_variance(double step, double beta0, double beta1, double h, double sigma2) {
  Mat m0, m1;
  Vec n0, n1;
  pnm_step_maps(step, beta0, beta1, h, 0, m0, n0);
  pnm_step_maps(step, beta0, beta1, h, 1, m1, n1);
  // Two steps starting at an even time.
  const Mat a = m1 * m0;
  Mat b(3, 2);
  b.col(0) = m1 * n0;
  b.col(1) = n1;
  const Mat p_even = discrete_lyapunov(a, b * b.transpose() * sigma2);
  const Mat p_odd = m0 * p_even * m0.transpose() + n0 * n0.transpose() * sigma2;
  return 0.5 * (p_even(0, 0) + p_odd(0, 0));
}

double hb_stationary_variance(double lr, double beta1, double beta3, double h, double sigma2) {
  // state (theta, m): m' = beta1 m + beta3 (h theta + xi); theta' = theta - lr m'
  Mat m_mom(2, 2);
  m_mom << 1.0, 0.0, beta3 * h, beta1;
  Mat m_theta(2, 2);
  m_theta << 1.0, -lr, 0.0, 1.0;
  const Mat a = m_theta * m_mom;
  const Vec n = m_theta * Vec{{0.0, beta3}};
  return discrete_lyapunov(a, n * n.transpose() * sigma2)(0, 0);
}

double kl_1d(double mq, double sq2, double mp, double sp2) {
  return 0.5 * (std::log(sp2 / sq2) + sq2 / sp2 + (mq - mp) * (mq - mp) / sp2 - 1.0);
}

double derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

std::pair<double, double> mean_pop_std(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(xs.size());
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  return {m, std::sqrt(v / static_cast<double>(xs.size()))};
}

double squared_weight_sum(double beta1, double beta3, double sigma2, std::int64_t t) {
  double s = 0.0;
  double w = beta3;
  for (std::int64_t k = 0; k <= t; ++k) {
    s += w * w;
    w *= beta1;
  }
  return s * sigma2;
}

}  // namespace oracle
