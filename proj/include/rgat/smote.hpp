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

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rgat/label.hpp"

namespace rgat {

struct SmoteResult {
  Eigen::MatrixXd rows;       // originals first, then synthetic rows
  std::vector<Label> labels;  // aligned with rows
  struct Origin {
    std::size_t base;
    std::size_t neighbor;
    double lambda;
  };
  std::vector<Origin> synthetic_origins;  // one per synthetic row, in order
};

/// Synthetic minority oversampling. Every class present in `labels` is
/// raised to the majority count by interpolating x + lambda * (x_nn - x)
/// between a seeded-random member x and one of its k nearest same-class
/// neighbours (Euclidean, ties by row index; k clamped to class size - 1).
/// Throws when a minority class has a single member.
SmoteResult smote_oversample(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                             int k_neighbors, std::uint64_t seed);

}  // namespace rgat
