// Copyright 2026 The rgat-abstracts Authors.
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

#include "rgat/baselines.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rgat/error.hpp"
#include "rgat/kernels.hpp"
#include "rgat/rng.hpp"

namespace rgat {

namespace {

void check_rows(const Eigen::MatrixXd& rows, const std::vector<Label>& labels) {
  if (static_cast<std::size_t>(rows.rows()) != labels.size())
    throw Error(std::to_string(rows.rows()) + " rows but " + std::to_string(labels.size()) +
                " labels");
  if (labels.empty()) throw Error("no training rows");
}

Eigen::MatrixXd one_hot(const std::vector<Label>& labels) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(labels.size()), 4);
  for (std::size_t i = 0; i < labels.size(); ++i) y(static_cast<Eigen::Index>(i), code(labels[i])) = 1.0;
  return y;
}

}  // namespace

MultinomialNb mnb_train(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                        double alpha) {
  check_rows(rows, labels);
  if (!(alpha > 0.0)) throw Error("mnb: alpha must be positive");
  if ((rows.array() < 0.0).any()) throw Error("mnb: negative feature value");
  const Eigen::MatrixXd y = one_hot(labels);
  const Eigen::MatrixXd mass = y.transpose() * rows;  // 4 x V
  const Eigen::Vector4d counts = y.colwise().sum().transpose();
  const double v = static_cast<double>(rows.cols());

  MultinomialNb model;
  model.log_likelihood.resize(4, rows.cols());
  for (int c = 0; c < 4; ++c) {
    model.log_prior(c) = counts(c) > 0 ? std::log(counts(c) / static_cast<double>(labels.size()))
                                       : -std::numeric_limits<double>::infinity();
    const double denom = mass.row(c).sum() + alpha * v;
    model.log_likelihood.row(c) = ((mass.row(c).array() + alpha) / denom).log().matrix();
  }
  return model;
}

Eigen::Vector4d mnb_log_posterior(const MultinomialNb& model, const Eigen::VectorXd& x) {
  if (x.size() != model.log_likelihood.cols()) throw Error("mnb: feature dimension mismatch");
  if ((x.array() < 0.0).any()) throw Error("mnb: negative feature value");
  Eigen::Vector4d out = model.log_prior;
  for (int c = 0; c < 4; ++c)
    if (std::isfinite(out(c))) out(c) += model.log_likelihood.row(c).dot(x);
  return out;
}

Label mnb_predict(const MultinomialNb& model, const Eigen::VectorXd& x) {
  return label_from_code(static_cast<int>(argmax(mnb_log_posterior(model, x))));
}

double logreg_loss(const SoftmaxRegression& model, const Eigen::MatrixXd& rows,
                   const std::vector<Label>& labels, double l2, SoftmaxRegression* gradient) {
  check_rows(rows, labels);
  Eigen::MatrixXd logits = rows * model.weight;
  logits.rowwise() += model.bias;
  const double n = static_cast<double>(labels.size());
  double loss = 0.0;
  Eigen::MatrixXd probs(logits.rows(), 4);
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    Eigen::RowVectorXd z = logits.row(i);
    loss += log_sum_exp(z) - z(code(labels[static_cast<std::size_t>(i)]));
    probs.row(i) = softmax(z);
  }
  loss = loss / n + l2 * model.weight.squaredNorm();
  if (gradient) {
    Eigen::MatrixXd delta = (probs - one_hot(labels)) / n;
    gradient->weight = rows.transpose() * delta + 2.0 * l2 * model.weight;
    gradient->bias = delta.colwise().sum();
  }
  return loss;
}

SoftmaxRegression logreg_train(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                               const LogRegConfig& config) {
  check_rows(rows, labels);
  if (!(config.learning_rate > 0.0) || config.epochs < 1)
    throw Error("logreg: learning_rate must be positive and epochs >= 1");
  SoftmaxRegression model;
  model.weight = Eigen::MatrixXd::Zero(rows.cols(), 4);
  model.bias.setZero();
  if (config.init_scale > 0.0) {
    Rng rng(config.seed, "logreg-init");
    for (Eigen::Index i = 0; i < model.weight.size(); ++i)
      model.weight.data()[i] = rng.uniform(-config.init_scale, config.init_scale);
  }
  SoftmaxRegression grad;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    const double loss = logreg_loss(model, rows, labels, config.l2, &grad);
    if (!std::isfinite(loss)) throw Error("logreg: non-finite loss at epoch " + std::to_string(epoch));
    model.weight -= config.learning_rate * grad.weight;
    model.bias -= config.learning_rate * grad.bias;
  }
  return model;
}

Eigen::Vector4d logreg_probabilities(const SoftmaxRegression& model, const Eigen::VectorXd& x) {
  if (x.size() != model.weight.rows()) throw Error("logreg: feature dimension mismatch");
  Eigen::RowVector4d z = x.transpose() * model.weight + model.bias;
  return softmax(z).transpose();
}

Label logreg_predict(const SoftmaxRegression& model, const Eigen::VectorXd& x) {
  return label_from_code(static_cast<int>(argmax(logreg_probabilities(model, x))));
}

}  // namespace rgat
