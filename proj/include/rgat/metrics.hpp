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
#include <vector>

#include <Eigen/Core>

#include "rgat/label.hpp"

namespace rgat {

/// Rows are the true class, columns the predicted class.
struct ConfusionMatrix {
  Eigen::Matrix<std::int64_t, 4, 4> counts = Eigen::Matrix<std::int64_t, 4, 4>::Zero();

  void add(Label truth, Label predicted) { ++counts(code(truth), code(predicted)); }
  std::int64_t total() const { return counts.sum(); }
  /// Each row divided by its support; rows with no support stay zero.
  Eigen::Matrix4d row_normalized() const;
  ConfusionMatrix& operator+=(const ConfusionMatrix& other) {
    counts += other.counts;
    return *this;
  }
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct Metrics {
  std::array<ClassScores, kNumClasses> per_class;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
};

/// Precision is 0 for a class never predicted, recall 0 for a class with no
/// support, and F1 is 0 whenever P + R = 0.
Metrics compute_metrics(const ConfusionMatrix& confusion);

ConfusionMatrix confusion_from(const std::vector<Label>& truth, const std::vector<Label>& predicted);

}  // namespace rgat
