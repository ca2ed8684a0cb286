// Copyright 2026 The bellconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "bellconf/errors.h"
#include "bellconf/qml/qml.h"

namespace bellconf::qml {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double feature_value(const Sample& s, Feature f) { return f == Feature::kA ? s.a : s.c; }

}  // namespace

double LogisticModel::score(const Sample& s) const {
  double z = bias;
  for (size_t j = 0; j < features.size(); ++j) z += weights[j] * feature_value(s, features[j]);
  return z;
}

double LogisticModel::probability(const Sample& s) const { return sigmoid(score(s)); }

int LogisticModel::predict(const Sample& s) const { return probability(s) >= 0.5 ? 1 : 0; }

LogisticModel train_logistic(std::span<const Sample> train, std::vector<Feature> features,
                             const Hyper& hyper) {
  if (train.empty()) throw ArgumentError("train_logistic needs a nonempty training set");
  if (features.empty()) throw ArgumentError("train_logistic needs at least one feature");
  if (hyper.iterations < 0 || !(hyper.learning_rate > 0) || !(hyper.l2 >= 0)) {
    throw ArgumentError("invalid logistic hyperparameters");
  }
  LogisticModel m;
  m.features = std::move(features);
  m.weights.assign(m.features.size(), 0.0);
  m.training_meta = hyper;

  const size_t k = m.features.size();
  const double inv_n = 1.0 / static_cast<double>(train.size());
  std::vector<double> grad(k);
  for (int it = 0; it < hyper.iterations; ++it) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0;
    for (const Sample& s : train) {
      double residual = m.probability(s) - s.b;
      grad_bias += residual;
      for (size_t j = 0; j < k; ++j) grad[j] += residual * feature_value(s, m.features[j]);
    }
    for (size_t j = 0; j < k; ++j) {
      m.weights[j] -= hyper.learning_rate * (grad[j] * inv_n + hyper.l2 * m.weights[j]);
    }
    m.bias -= hyper.learning_rate * grad_bias * inv_n;
  }
  for (double w : m.weights) {
    if (!std::isfinite(w)) throw NumericalError("logistic weights diverged");
  }
  return m;
}

double accuracy(const LogisticModel& model, std::span<const Sample> rows) {
  if (rows.empty()) throw ArgumentError("accuracy of an empty set");
  size_t correct = 0;
  for (const Sample& s : rows) correct += model.predict(s) == s.b;
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

}  // namespace bellconf::qml
