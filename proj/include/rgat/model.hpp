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
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rgat/autodiff.hpp"
#include "rgat/graph.hpp"

namespace rgat {

using ad::Tensor;

enum class HeadMerge { kConcat, kAverage };
enum class Activation { kElu, kIdentity };

std::string_view merge_name(HeadMerge merge);
HeadMerge parse_merge(std::string_view name);
std::string_view activation_name(Activation activation);
Activation parse_activation(std::string_view name);

struct GatLayerConfig {
  int in_dim = 0;
  int out_dim_per_head = 0;
  int heads = 1;
  double leaky_slope = 0.2;
  HeadMerge merge = HeadMerge::kConcat;
  Activation activation = Activation::kElu;

  int output_width() const {
    return merge == HeadMerge::kConcat ? heads * out_dim_per_head : out_dim_per_head;
  }
  bool operator==(const GatLayerConfig&) const = default;
};

/// One attention head: projection W (in_dim x out_dim) and attention vector
/// a (2*out_dim x 1), whose first half scores the source node i and second
/// half the neighbour j.
struct GatHead {
  Tensor weight;
  Tensor attention;
};

struct GatLayer {
  GatLayerConfig config;
  std::vector<GatHead> heads;
};

/// Architecture hyperparameters for the residual graph attention network.
struct RgatConfig {
  int input_dim = 0;  // F, the vocabulary size
  int hidden_dim = 64;  // D
  int heads = 4;  // K, every GAT layer
  double leaky_slope = 0.2;
  Activation activation = Activation::kElu;
  double dropout_keep = 0.5;

  /// gat1 concatenates K heads of width D/K; gat2 and the three residual
  /// block layers average K heads of width D.
  GatLayerConfig gat1() const;
  GatLayerConfig hidden_layer() const;
  /// Throws rgat::Error for non-positive dims, D not divisible by K, or
  /// keep probability outside (0, 1].
  void validate() const;

  bool operator==(const RgatConfig&) const = default;
};

inline constexpr int kNumOutputs = 4;

/// gat1 -> gat2 -> residual block (three GAT layers, input added back after
/// the second) -> mean pooling -> dropout -> dense head -> softmax.
struct RgatModel {
  RgatConfig config;
  GatLayer gat1;
  GatLayer gat2;
  std::array<GatLayer, 3> block;
  Tensor head_weight;  // D x 4
  Tensor head_bias;    // 1 x 4

  /// Fixed registration order shared by the tape, the optimizer and the
  /// artifact format.
  std::vector<Tensor*> parameters();
  std::vector<const Tensor*> parameters() const;
  std::vector<std::string> parameter_names() const;

  /// Checks every tensor shape against the config and that the residual add
  /// is well formed (gat2 and all block layers produce width D).
  void validate() const;
};

/// Glorot-uniform weights, s = sqrt(6 / (fan_in + fan_out)); zero bias.
RgatModel init_params(const RgatConfig& config, std::uint64_t seed);

/// Throws unless all three layers map width `width` to width `width`.
void validate_residual_block(const std::array<GatLayer, 3>& block, int width);

// ---------------------------------------------------------------------------
// Differentiable forward on a tape.

struct HeadVars {
  ad::Var weight;
  ad::Var attention;
};
using LayerVars = std::vector<HeadVars>;

struct ModelVars {
  LayerVars gat1, gat2;
  std::array<LayerVars, 3> block;
  ad::Var head_weight, head_bias;
};

/// Registers every model tensor on the tape in parameters() order.
ModelVars register_parameters(ad::Tape& tape, const RgatModel& model);

/// Intermediate values captured during a forward pass, for inspection.
struct ForwardTrace {
  /// attention[layer][head] is the N x N coefficient matrix; layers are
  /// gat1, gat2, block1, block2, block3.
  std::vector<std::vector<Eigen::MatrixXd>> attention;
  Eigen::MatrixXd block_input;    // h
  Eigen::MatrixXd block_summed;   // h + GAT2(GAT1(h))
  Eigen::MatrixXd pooled;
};

/// Raw attention scores E = leaky_relu(a . [W h_i || W h_j]) for all pairs;
/// `projected` is H W.
ad::Var attention_scores(const HeadVars& head, ad::Var projected, double slope);

/// One GAT layer over dense input.
ad::Var gat_layer_forward(const GatLayerConfig& config, const LayerVars& layer, ad::Var input,
                          const BoolMatrix& mask, std::vector<Eigen::MatrixXd>* attention = nullptr);
/// One GAT layer over the sparse node-feature matrix.
ad::Var gat_layer_forward(const GatLayerConfig& config, const LayerVars& layer,
                          const ad::SparseRows& input, const BoolMatrix& mask,
                          std::vector<Eigen::MatrixXd>* attention = nullptr);

ad::Var residual_block_forward(const std::array<GatLayerConfig, 3>& configs,
                               const std::array<LayerVars, 3>& block, ad::Var input,
                               const BoolMatrix& mask, ForwardTrace* trace = nullptr);

/// 1 x 4 pre-softmax logits.
ad::Var rgat_logits(const RgatModel& model, const ModelVars& vars, const DocumentGraph& graph,
                    bool train_mode, std::uint64_t dropout_seed, ForwardTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Plain evaluation (no gradients).

Eigen::MatrixXd attention_scores(const GatHead& head, const Eigen::MatrixXd& features,
                                 double slope);
Eigen::MatrixXd gat_layer_forward(const GatLayer& layer, const Eigen::MatrixXd& features,
                                  const DocumentGraph& graph);
Eigen::MatrixXd residual_block_forward(const std::array<GatLayer, 3>& block,
                                       const Eigen::MatrixXd& features, const DocumentGraph& graph);

/// Class probabilities (sum to 1). Eval mode ignores the seed.
Eigen::Vector4d rgat_forward(const RgatModel& model, const DocumentGraph& graph,
                             bool train_mode = false, std::uint64_t seed = 0,
                             ForwardTrace* trace = nullptr);

}  // namespace rgat
