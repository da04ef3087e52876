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

#include "pnm/problems/tiny_mlp.hpp"

#include <cmath>
#include <string>

#include "pnm/core/error.hpp"

namespace pnm::problems {
namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMatrix>;
using MutMap = Eigen::Map<RowMatrix>;

struct Layout {
  Eigen::Index d, h, k;
  Eigen::Index w1() const { return 0; }
  Eigen::Index b1() const { return h * d; }
  Eigen::Index w2() const { return h * d + h; }
  Eigen::Index b2() const { return h * d + h + k * h; }
  Eigen::Index size() const { return h * d + h + k * h + k; }
};

}  // namespace

TinyMlp::TinyMlp(std::size_t inputs, std::size_t hidden, std::size_t classes)
    : inputs_(inputs), hidden_(hidden), classes_(classes) {
  if (inputs == 0 || hidden == 0) throw ConfigError("TinyMlp: inputs and hidden must be >= 1");
  if (classes < 2) throw ConfigError("TinyMlp: need at least 2 classes");
}

std::size_t TinyMlp::dim() const {
  return hidden_ * inputs_ + hidden_ + classes_ * hidden_ + classes_;
}

void TinyMlp::check(const FiniteDataset& data) const {
  data.validate();
  require_same_dim(data.feature_dim(), inputs_, "TinyMlp inputs");
  if (data.num_classes != classes_) {
    throw ConfigError("TinyMlp: dataset has " + std::to_string(data.num_classes) +
                      " classes, model expects " + std::to_string(classes_));
  }
}

Matrix TinyMlp::logits(const Vector& theta, const Matrix& features) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim(), "TinyMlp theta");
  const Layout l{static_cast<Eigen::Index>(inputs_), static_cast<Eigen::Index>(hidden_),
                 static_cast<Eigen::Index>(classes_)};
  ConstMap w1(theta.data() + l.w1(), l.h, l.d);
  ConstMap w2(theta.data() + l.w2(), l.k, l.h);
  const auto b1 = theta.segment(l.b1(), l.h);
  const auto b2 = theta.segment(l.b2(), l.k);
  Matrix act = ((features * w1.transpose()).rowwise() + b1.transpose()).array().tanh();
  return (act * w2.transpose()).rowwise() + b2.transpose();
}

double TinyMlp::evaluate(const Vector& theta, const FiniteDataset& data,
                         std::span<const std::size_t> rows, Vector* grad) const {
  require_same_dim(static_cast<std::size_t>(theta.size()), dim(), "TinyMlp theta");
  if (rows.empty()) throw ConfigError("TinyMlp: empty batch");
  const Layout l{static_cast<Eigen::Index>(inputs_), static_cast<Eigen::Index>(hidden_),
                 static_cast<Eigen::Index>(classes_)};
  const auto n = static_cast<Eigen::Index>(rows.size());

  Matrix x(n, l.d);
  for (Eigen::Index r = 0; r < n; ++r) {
    x.row(r) = data.features.row(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)]));
  }
  ConstMap w1(theta.data() + l.w1(), l.h, l.d);
  ConstMap w2(theta.data() + l.w2(), l.k, l.h);
  const auto b1 = theta.segment(l.b1(), l.h);
  const auto b2 = theta.segment(l.b2(), l.k);

  const Matrix act = ((x * w1.transpose()).rowwise() + b1.transpose()).array().tanh();
  Matrix z = (act * w2.transpose()).rowwise() + b2.transpose();

  // Softmax probabilities overwrite z; loss accumulates -log p_y.
  double loss = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    const double zmax = z.row(r).maxCoeff();
    z.row(r).array() -= zmax;
    const double log_norm = std::log(z.row(r).array().exp().sum());
    const int y = data.label_class(rows[static_cast<std::size_t>(r)]);
    loss -= z(r, y) - log_norm;
    z.row(r) = (z.row(r).array() - log_norm).exp().matrix();
  }
  const double inv = 1.0 / static_cast<double>(n);
  if (!grad) return loss * inv;

  // dz = (p - onehot) / n
  for (Eigen::Index r = 0; r < n; ++r) {
    z(r, data.label_class(rows[static_cast<std::size_t>(r)])) -= 1.0;
  }
  z *= inv;

  grad->resize(l.size());
  MutMap gw1(grad->data() + l.w1(), l.h, l.d);
  MutMap gw2(grad->data() + l.w2(), l.k, l.h);
  gw2.noalias() = z.transpose() * act;
  grad->segment(l.b2(), l.k) = z.colwise().sum().transpose();
  const Matrix dpre = ((z * w2).array() * (1.0 - act.array().square())).matrix();
  gw1.noalias() = dpre.transpose() * x;
  grad->segment(l.b1(), l.h) = dpre.colwise().sum().transpose();
  return loss * inv;
}

Vector TinyMlp::initial_weights(RngStream& rng) const {
  const Layout l{static_cast<Eigen::Index>(inputs_), static_cast<Eigen::Index>(hidden_),
                 static_cast<Eigen::Index>(classes_)};
  Vector theta = Vector::Zero(l.size());
  const double s1 = 1.0 / std::sqrt(static_cast<double>(l.d));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(l.h));
  for (Eigen::Index i = 0; i < l.h * l.d; ++i) theta[l.w1() + i] = s1 * rng.normal();
  for (Eigen::Index i = 0; i < l.k * l.h; ++i) theta[l.w2() + i] = s2 * rng.normal();
  return theta;
}

std::vector<int> TinyMlp::predict(const Vector& theta, const Matrix& features) const {
  const Matrix z = logits(theta, features);
  std::vector<int> out(static_cast<std::size_t>(z.rows()));
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    Eigen::Index best = 0;
    z.row(r).maxCoeff(&best);
    out[static_cast<std::size_t>(r)] = static_cast<int>(best);
  }
  return out;
}

double TinyMlp::classification_error(const Vector& theta, const FiniteDataset& data) const {
  const std::vector<int> pred = predict(theta, data.features);
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) wrong += pred[i] != data.label_class(i);
  return static_cast<double>(wrong) / static_cast<double>(pred.size());
}

double TinyMlp::classification_error(const Vector& theta, const FiniteDataset& data,
                                     std::span<const std::size_t> rows) const {
  if (rows.empty()) return 0.0;
  const FiniteDataset part = data.subset(rows);
  return classification_error(theta, part);
}

std::pair<double, Vector> tiny_mlp_eval(const TinyMlp& model, const Vector& weights,
                                        const FiniteDataset& data,
                                        std::span<const std::size_t> rows) {
  Vector grad;
  const double loss = model.evaluate(weights, data, rows, &grad);
  return {loss, std::move(grad)};
}

}  // namespace pnm::problems
