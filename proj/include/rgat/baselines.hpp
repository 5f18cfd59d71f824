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

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rgat/label.hpp"

namespace rgat {

/// Multinomial naive Bayes over non-negative feature rows.
struct MultinomialNb {
  Eigen::Vector4d log_prior;       // -inf for classes absent from training
  Eigen::MatrixXd log_likelihood;  // 4 x V
};

/// Priors are empirical class frequencies; likelihoods use additive
/// smoothing (N_cv + alpha) / (N_c + alpha V) over summed feature mass.
/// Throws on negative features.
MultinomialNb mnb_train(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                        double alpha = 1.0);
Eigen::Vector4d mnb_log_posterior(const MultinomialNb& model, const Eigen::VectorXd& x);
Label mnb_predict(const MultinomialNb& model, const Eigen::VectorXd& x);

/// Multinomial logistic (softmax) regression.
struct SoftmaxRegression {
  Eigen::MatrixXd weight;  // V x 4
  Eigen::RowVector4d bias;
};

struct LogRegConfig {
  double learning_rate = 2.0;
  int epochs = 300;
  double l2 = 1e-4;
  /// Initial weights are uniform(-init_scale, init_scale); 0 starts at zero.
  double init_scale = 0.0;
  std::uint64_t seed = 42;
};

/// Mean cross-entropy plus l2 * ||W||^2 (bias unpenalized); fills the
/// gradient when requested.
double logreg_loss(const SoftmaxRegression& model, const Eigen::MatrixXd& rows,
                   const std::vector<Label>& labels, double l2,
                   SoftmaxRegression* gradient = nullptr);

/// Full-batch gradient descent. Throws on a non-finite loss.
SoftmaxRegression logreg_train(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                               const LogRegConfig& config = {});
Eigen::Vector4d logreg_probabilities(const SoftmaxRegression& model, const Eigen::VectorXd& x);
Label logreg_predict(const SoftmaxRegression& model, const Eigen::VectorXd& x);

}  // namespace rgat
