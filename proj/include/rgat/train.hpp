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

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rgat/graph.hpp"
#include "rgat/metrics.hpp"
#include "rgat/model.hpp"

namespace rgat {

enum class ClassWeighting { kInverseFrequency, kNone };

std::string_view weighting_name(ClassWeighting weighting);
ClassWeighting parse_weighting(std::string_view name);

/// Full-batch Adam on class-weighted cross-entropy plus l2 * ||params||^2.
struct TrainConfig {
  double learning_rate = 5e-3;
  int epochs = 100;
  int early_stop_patience = 10;
  std::uint64_t seed = 42;
  ClassWeighting class_weighting = ClassWeighting::kInverseFrequency;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  double l2 = 5e-4;
  /// Worker threads for per-graph gradients; 0 picks the hardware count.
  /// Results do not depend on this value.
  int threads = 0;

  void validate() const;
};

struct EpochLosses {
  double train_loss;  // weighted cross-entropy at the start of the epoch
  double val_loss;    // weighted cross-entropy after the epoch's update
};

struct TrainHistory {
  std::vector<EpochLosses> epochs;
  int stopped_epoch = 0;  // last epoch run (1-based)
  int best_epoch = 0;     // epoch whose parameters were restored (1-based)
};

struct TrainResult {
  RgatModel model;
  TrainHistory history;
};

/// weight_c = n_total / (4 * n_c) under inverse frequency, else 1. Classes
/// with no members get weight 0.
std::array<double, kNumClasses> class_weights(const std::vector<DocumentGraph>& graphs,
                                              ClassWeighting weighting);

/// Sum_i w_{y_i} CE_i / Sum_i w_{y_i} in eval mode (no dropout).
double weighted_loss(const RgatModel& model, const std::vector<DocumentGraph>& graphs,
                     const std::array<double, kNumClasses>& weights, int threads = 0);

/// Requires every training class to be present and a non-empty validation
/// set. Restores the parameters of the epoch with the lowest validation
/// loss and stops after `early_stop_patience` epochs without improvement.
TrainResult train(const std::vector<DocumentGraph>& graphs,
                  const std::vector<DocumentGraph>& val_graphs, RgatConfig model_config,
                  const TrainConfig& train_config);

/// argmax of rgat_forward in eval mode, ties to the lowest class code.
Label predict(const RgatModel& model, const DocumentGraph& graph);

struct Evaluation {
  Metrics metrics;
  ConfusionMatrix confusion;
  std::vector<Label> predictions;
};

Evaluation evaluate(const RgatModel& model, const std::vector<DocumentGraph>& graphs,
                    int threads = 0);

}  // namespace rgat
