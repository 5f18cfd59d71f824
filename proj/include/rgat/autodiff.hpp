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
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rgat/kernels.hpp"

namespace rgat::ad {

/// Dense row-major double tensor; every value in the core is a 2-D matrix.
using Tensor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor>;

class Tape;

/// Handle to a value recorded on a Tape.
struct Var {
  Tape* tape = nullptr;
  std::size_t id = 0;

  const Tensor& value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
};

/// Append-only record of executed primitives. Nodes are stored in execution
/// order, so reverse iteration is a valid topological order for backward.
/// Not thread-safe; use one tape per worker.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);

  /// Registers a trainable tensor. Gradients are returned in registration
  /// order. The tape refers to `value` without copying it, so it must
  /// outlive the tape's current recording.
  Var parameter(const Tensor& value);
  std::size_t parameter_count() const { return params_.size(); }

  /// d(loss)/d(parameter) for every registered parameter, zero when the
  /// parameter is off the loss path. Resets the tape.
  std::vector<Tensor> backward(Var loss);

  /// As backward(), but adds `scale * gradient` into `accumulator`, which
  /// must hold one tensor per registered parameter with matching shape.
  void backward_into(Var loss, std::vector<Tensor>& accumulator, double scale = 1.0);

  /// Smallest |input| seen by a non-smooth primitive (leaky_relu, elu).
  double kink_distance() const { return kink_distance_; }
  /// Sign pattern of every non-smooth primitive input, in execution order.
  const std::vector<bool>& kink_signature() const { return kink_signature_; }

  void reset();
  std::size_t size() const { return nodes_.size(); }

  // Primitive plumbing.
  /// Receives the tape, the node's own id and the upstream gradient.
  using BackwardFn = std::function<void(Tape&, std::size_t self, const Tensor& upstream)>;
  Var record(Tensor value, BackwardFn backward);
  const Tensor& value(std::size_t id) const {
    const Node& n = nodes_[id];
    return n.external ? *n.external : n.value;
  }
  /// Adds `contribution(g)` into the gradient slot of node `id`.
  template <typename F>
  void accumulate(std::size_t id, F&& contribution) {
    Tensor& g = grad_slot(id);
    contribution(g);
  }
  void note_kink_inputs(const Tensor& inputs);

 private:
  struct Node {
    Tensor value;
    const Tensor* external = nullptr;
    Tensor grad;
    bool has_grad = false;
    BackwardFn backward;
    long param_slot = -1;
  };

  Tensor& grad_slot(std::size_t id);
  void run_backward(Var loss, double seed);

  std::vector<Node> nodes_;
  std::vector<std::size_t> params_;
  std::vector<Tensor>* external_ = nullptr;
  double kink_distance_ = std::numeric_limits<double>::infinity();
  std::vector<bool> kink_signature_;
};

// Forward primitives. Shape mismatches throw rgat::Error naming both shapes.
Var matmul(Var a, Var b);
/// Constant sparse rows times a dense value.
Var sparse_matmul(const SparseRows& x, Var w);
Var add(Var a, Var b);
Var scale(Var a, double c);
Var concat_cols(Var a, Var b);
Var transpose(Var a);
/// Rows [start, start + count) of `a`.
Var slice_rows(Var a, Eigen::Index start, Eigen::Index count);
Var leaky_relu(Var a, double slope);
Var elu(Var a);
/// Softmax over masked entries of each row; unmasked outputs are 0.
Var masked_row_softmax(Var scores, const BoolMatrix& mask);
/// 1 x cols mean over rows.
Var row_mean(Var h);
/// Inverted dropout; identity in eval mode or when keep_prob == 1.
Var dropout(Var a, double keep_prob, bool train_mode, std::uint64_t seed);
/// 1 x 1 cross-entropy of a 1 x C logit row against class `target`.
Var cross_entropy_with_logits(Var logits, int target);
/// 1 x 1 sum of all entries.
Var sum(Var a);

/// Result of one loss evaluation for gradient checking.
struct LossEvaluation {
  double loss = 0.0;
  std::vector<Tensor> gradients;  // filled when requested
  double kink_distance = std::numeric_limits<double>::infinity();
  std::vector<bool> kink_signature;
};

using LossFunction =
    std::function<LossEvaluation(const std::vector<Tensor>& params, bool with_gradients)>;

struct FiniteDiffOptions {
  double eps = 1e-5;
  /// If a non-smooth input lies within this distance of 0 at the probe
  /// point, the parameters are shifted by a seeded offset and re-probed.
  double kink_margin = 1e-5;
  double offset_scale = 1e-2;
  int max_reseeds = 20;
  std::uint64_t seed = 0;
};

struct FiniteDiffReport {
  double max_relative_error = 0.0;
  std::size_t checked = 0;
  /// Coordinates whose +/- eps probes flip the sign of a non-smooth input.
  std::size_t excluded = 0;
  int reseeds = 0;
};

/// Central differences (L(p + eps) - L(p - eps)) / (2 eps) per coordinate
/// against the analytic gradient; relative error uses the denominator
/// max(1e-8, |analytic| + |numeric|).
FiniteDiffReport finite_diff_check(const LossFunction& loss, std::vector<Tensor> params,
                                   const FiniteDiffOptions& options = {});

}  // namespace rgat::ad
