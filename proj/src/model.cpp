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

#include "rgat/model.hpp"

#include <cmath>

#include "rgat/error.hpp"
#include "rgat/rng.hpp"

namespace rgat {

using ad::Var;

std::string_view merge_name(HeadMerge merge) {
  return merge == HeadMerge::kConcat ? "concat" : "average";
}

HeadMerge parse_merge(std::string_view name) {
  if (name == "concat") return HeadMerge::kConcat;
  if (name == "average") return HeadMerge::kAverage;
  throw Error("unknown head merge '" + std::string(name) + "'");
}

std::string_view activation_name(Activation activation) {
  return activation == Activation::kElu ? "elu" : "identity";
}

Activation parse_activation(std::string_view name) {
  if (name == "elu") return Activation::kElu;
  if (name == "identity") return Activation::kIdentity;
  throw Error("unknown activation '" + std::string(name) + "'");
}

GatLayerConfig RgatConfig::gat1() const {
  return {input_dim, hidden_dim / heads, heads, leaky_slope, HeadMerge::kConcat, activation};
}

GatLayerConfig RgatConfig::hidden_layer() const {
  return {hidden_dim, hidden_dim, heads, leaky_slope, HeadMerge::kAverage, activation};
}

void RgatConfig::validate() const {
  if (input_dim <= 0) throw Error("input_dim must be positive");
  if (hidden_dim <= 0) throw Error("hidden_dim must be positive");
  if (heads <= 0) throw Error("heads must be positive");
  if (hidden_dim % heads != 0)
    throw Error("hidden_dim " + std::to_string(hidden_dim) + " is not divisible by heads " +
                std::to_string(heads));
  if (!(dropout_keep > 0.0 && dropout_keep <= 1.0)) throw Error("dropout_keep must lie in (0, 1]");
  if (!(leaky_slope >= 0.0)) throw Error("leaky_slope must be non-negative");
}

namespace {

void check_shape(const Tensor& t, Eigen::Index rows, Eigen::Index cols, const std::string& what) {
  if (t.rows() != rows || t.cols() != cols)
    throw Error(what + " has shape " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  if (!t.allFinite()) throw Error(what + " contains non-finite values");
}

void validate_layer(const GatLayer& layer, const std::string& name) {
  const auto& c = layer.config;
  if (c.heads < 1 || c.in_dim < 1 || c.out_dim_per_head < 1)
    throw Error(name + ": dimensions must be positive");
  if (static_cast<int>(layer.heads.size()) != c.heads)
    throw Error(name + ": expected " + std::to_string(c.heads) + " heads, found " +
                std::to_string(layer.heads.size()));
  for (std::size_t k = 0; k < layer.heads.size(); ++k) {
    check_shape(layer.heads[k].weight, c.in_dim, c.out_dim_per_head,
                name + ".head" + std::to_string(k) + ".W");
    check_shape(layer.heads[k].attention, 2 * c.out_dim_per_head, 1,
                name + ".head" + std::to_string(k) + ".a");
  }
}

GatLayer init_layer(const GatLayerConfig& config, Rng& rng) {
  auto glorot = [&rng](Eigen::Index rows, Eigen::Index cols, double fan_in, double fan_out) {
    const double s = std::sqrt(6.0 / (fan_in + fan_out));
    Tensor t(rows, cols);
    for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = rng.uniform(-s, s);
    return t;
  };
  GatLayer layer;
  layer.config = config;
  for (int k = 0; k < config.heads; ++k) {
    GatHead head;
    head.weight = glorot(config.in_dim, config.out_dim_per_head, config.in_dim,
                         config.out_dim_per_head);
    head.attention = glorot(2 * config.out_dim_per_head, 1, 2 * config.out_dim_per_head, 1);
    layer.heads.push_back(std::move(head));
  }
  return layer;
}

}  // namespace

void validate_residual_block(const std::array<GatLayer, 3>& block, int width) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    const auto& c = block[i].config;
    if (c.in_dim != width || c.output_width() != width)
      throw Error("residual block layer " + std::to_string(i + 1) + " maps width " +
                  std::to_string(c.in_dim) + " to " + std::to_string(c.output_width()) +
                  "; all block layers must preserve width " + std::to_string(width));
  }
}

std::vector<Tensor*> RgatModel::parameters() {
  std::vector<Tensor*> out;
  auto add_layer = [&out](GatLayer& layer) {
    for (auto& h : layer.heads) {
      out.push_back(&h.weight);
      out.push_back(&h.attention);
    }
  };
  add_layer(gat1);
  add_layer(gat2);
  for (auto& layer : block) add_layer(layer);
  out.push_back(&head_weight);
  out.push_back(&head_bias);
  return out;
}

std::vector<const Tensor*> RgatModel::parameters() const {
  auto mutable_params = const_cast<RgatModel*>(this)->parameters();
  return {mutable_params.begin(), mutable_params.end()};
}

std::vector<std::string> RgatModel::parameter_names() const {
  std::vector<std::string> out;
  auto add_layer = [&out](const GatLayer& layer, const std::string& name) {
    for (std::size_t k = 0; k < layer.heads.size(); ++k) {
      out.push_back(name + ".head" + std::to_string(k) + ".W");
      out.push_back(name + ".head" + std::to_string(k) + ".a");
    }
  };
  add_layer(gat1, "gat1");
  add_layer(gat2, "gat2");
  for (std::size_t i = 0; i < block.size(); ++i)
    add_layer(block[i], "block" + std::to_string(i + 1));
  out.emplace_back("head.W");
  out.emplace_back("head.b");
  return out;
}

void RgatModel::validate() const {
  config.validate();
  if (!(gat1.config == config.gat1())) throw Error("gat1 config does not match the model config");
  if (!(gat2.config == config.hidden_layer()))
    throw Error("gat2 config does not match the model config");
  validate_layer(gat1, "gat1");
  validate_layer(gat2, "gat2");
  for (std::size_t i = 0; i < block.size(); ++i)
    validate_layer(block[i], "block" + std::to_string(i + 1));
  if (gat1.config.output_width() != gat2.config.in_dim)
    throw Error("gat1 output width does not feed gat2");
  if (gat2.config.output_width() != config.hidden_dim)
    throw Error("gat2 output width must equal hidden_dim");
  validate_residual_block(block, config.hidden_dim);
  check_shape(head_weight, config.hidden_dim, kNumOutputs, "head.W");
  check_shape(head_bias, 1, kNumOutputs, "head.b");
}

RgatModel init_params(const RgatConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed, "init");
  RgatModel model;
  model.config = config;
  model.gat1 = init_layer(config.gat1(), rng);
  model.gat2 = init_layer(config.hidden_layer(), rng);
  for (auto& layer : model.block) layer = init_layer(config.hidden_layer(), rng);
  const double s = std::sqrt(6.0 / (config.hidden_dim + kNumOutputs));
  model.head_weight.resize(config.hidden_dim, kNumOutputs);
  for (Eigen::Index i = 0; i < model.head_weight.size(); ++i)
    model.head_weight.data()[i] = rng.uniform(-s, s);
  model.head_bias = Tensor::Zero(1, kNumOutputs);
  model.validate();
  return model;
}

ModelVars register_parameters(ad::Tape& tape, const RgatModel& model) {
  ModelVars vars;
  auto reg_layer = [&tape](const GatLayer& layer) {
    LayerVars out;
    for (const auto& h : layer.heads) out.push_back({tape.parameter(h.weight), tape.parameter(h.attention)});
    return out;
  };
  vars.gat1 = reg_layer(model.gat1);
  vars.gat2 = reg_layer(model.gat2);
  for (std::size_t i = 0; i < 3; ++i) vars.block[i] = reg_layer(model.block[i]);
  vars.head_weight = tape.parameter(model.head_weight);
  vars.head_bias = tape.parameter(model.head_bias);
  return vars;
}

Var attention_scores(const HeadVars& head, Var projected, double slope) {
  ad::Tape& tape = *projected.tape;
  const Eigen::Index n = projected.rows();
  const Eigen::Index width = projected.cols();
  if (head.attention.rows() != 2 * width || head.attention.cols() != 1)
    throw Error("attention vector has shape " + std::to_string(head.attention.rows()) + "x" +
                std::to_string(head.attention.cols()) + ", expected " +
                std::to_string(2 * width) + "x1");
  Var source = matmul(projected, ad::slice_rows(head.attention, 0, width));      // N x 1
  Var neighbor = matmul(projected, ad::slice_rows(head.attention, width, width));  // N x 1
  Var ones_row = tape.constant(Tensor::Ones(1, n));
  Var ones_col = tape.constant(Tensor::Ones(n, 1));
  // E_ij = source_i + neighbor_j
  Var scores = add(matmul(source, ones_row), matmul(ones_col, ad::transpose(neighbor)));
  return ad::leaky_relu(scores, slope);
}

namespace {

Var merge_and_activate(const GatLayerConfig& config, const std::vector<Var>& outputs) {
  Var merged = outputs.front();
  for (std::size_t k = 1; k < outputs.size(); ++k)
    merged = config.merge == HeadMerge::kConcat ? ad::concat_cols(merged, outputs[k])
                                                : ad::add(merged, outputs[k]);
  if (config.merge == HeadMerge::kAverage && outputs.size() > 1)
    merged = ad::scale(merged, 1.0 / static_cast<double>(outputs.size()));
  return config.activation == Activation::kElu ? ad::elu(merged) : merged;
}

template <typename Project>
Var gat_layer_impl(const GatLayerConfig& config, const LayerVars& layer, Project project,
                   const BoolMatrix& mask, std::vector<Eigen::MatrixXd>* attention) {
  if (static_cast<int>(layer.size()) != config.heads)
    throw Error("layer has " + std::to_string(layer.size()) + " heads, config expects " +
                std::to_string(config.heads));
  std::vector<Var> outputs;
  for (const auto& head : layer) {
    Var projected = project(head.weight);
    Var scores = attention_scores(head, projected, config.leaky_slope);
    Var alpha = ad::masked_row_softmax(scores, mask);
    if (attention) attention->push_back(alpha.value());
    outputs.push_back(matmul(alpha, projected));
  }
  return merge_and_activate(config, outputs);
}

}  // namespace

Var gat_layer_forward(const GatLayerConfig& config, const LayerVars& layer, Var input,
                      const BoolMatrix& mask, std::vector<Eigen::MatrixXd>* attention) {
  if (input.cols() != config.in_dim)
    throw Error("GAT layer expects input width " + std::to_string(config.in_dim) + ", got " +
                std::to_string(input.cols()));
  return gat_layer_impl(config, layer, [input](Var w) { return matmul(input, w); }, mask,
                        attention);
}

Var gat_layer_forward(const GatLayerConfig& config, const LayerVars& layer,
                      const ad::SparseRows& input, const BoolMatrix& mask,
                      std::vector<Eigen::MatrixXd>* attention) {
  if (input.cols() != config.in_dim)
    throw Error("GAT layer expects input width " + std::to_string(config.in_dim) + ", got " +
                std::to_string(input.cols()));
  return gat_layer_impl(config, layer, [&input](Var w) { return ad::sparse_matmul(input, w); },
                        mask, attention);
}

Var residual_block_forward(const std::array<GatLayerConfig, 3>& configs,
                           const std::array<LayerVars, 3>& block, Var input,
                           const BoolMatrix& mask, ForwardTrace* trace) {
  auto attn = [trace](std::size_t) -> std::vector<Eigen::MatrixXd>* {
    if (!trace) return nullptr;
    trace->attention.emplace_back();
    return &trace->attention.back();
  };
  Var h1 = gat_layer_forward(configs[0], block[0], input, mask, attn(0));
  Var h2 = gat_layer_forward(configs[1], block[1], h1, mask, attn(1));
  Var h3 = ad::add(input, h2);
  if (trace) {
    trace->block_input = input.value();
    trace->block_summed = h3.value();
  }
  return gat_layer_forward(configs[2], block[2], h3, mask, attn(2));
}

Var rgat_logits(const RgatModel& model, const ModelVars& vars, const DocumentGraph& graph,
                bool train_mode, std::uint64_t dropout_seed, ForwardTrace* trace) {
  if (graph.n_features() != static_cast<std::size_t>(model.config.input_dim))
    throw Error("graph has " + std::to_string(graph.n_features()) +
                " features per node, model expects " + std::to_string(model.config.input_dim));
  const BoolMatrix mask = graph.mask();
  auto attn = [trace]() -> std::vector<Eigen::MatrixXd>* {
    if (!trace) return nullptr;
    trace->attention.emplace_back();
    return &trace->attention.back();
  };
  Var h = gat_layer_forward(model.gat1.config, vars.gat1, graph.node_features, mask, attn());
  h = gat_layer_forward(model.gat2.config, vars.gat2, h, mask, attn());
  std::array<GatLayerConfig, 3> configs = {model.block[0].config, model.block[1].config,
                                           model.block[2].config};
  h = residual_block_forward(configs, vars.block, h, mask, trace);
  Var pooled = ad::row_mean(h);
  if (trace) trace->pooled = pooled.value();
  Var dropped = ad::dropout(pooled, model.config.dropout_keep, train_mode, dropout_seed);
  return ad::add(matmul(dropped, vars.head_weight), vars.head_bias);
}

Eigen::MatrixXd attention_scores(const GatHead& head, const Eigen::MatrixXd& features,
                                 double slope) {
  ad::Tape tape;
  HeadVars vars{tape.parameter(head.weight), tape.parameter(head.attention)};
  Var input = tape.constant(features);
  if (features.cols() != head.weight.rows())
    throw Error("attention_scores: features " + std::to_string(features.rows()) + "x" +
                std::to_string(features.cols()) + " do not match W " +
                std::to_string(head.weight.rows()) + "x" + std::to_string(head.weight.cols()));
  return attention_scores(vars, matmul(input, vars.weight), slope).value();
}

Eigen::MatrixXd gat_layer_forward(const GatLayer& layer, const Eigen::MatrixXd& features,
                                  const DocumentGraph& graph) {
  if (static_cast<std::size_t>(features.rows()) != graph.n_nodes())
    throw Error("feature rows do not match graph nodes");
  ad::Tape tape;
  LayerVars vars;
  for (const auto& h : layer.heads) vars.push_back({tape.parameter(h.weight), tape.parameter(h.attention)});
  return gat_layer_forward(layer.config, vars, tape.constant(features), graph.mask()).value();
}

Eigen::MatrixXd residual_block_forward(const std::array<GatLayer, 3>& block,
                                       const Eigen::MatrixXd& features, const DocumentGraph& graph) {
  validate_residual_block(block, static_cast<int>(features.cols()));
  if (static_cast<std::size_t>(features.rows()) != graph.n_nodes())
    throw Error("feature rows do not match graph nodes");
  ad::Tape tape;
  std::array<LayerVars, 3> vars;
  std::array<GatLayerConfig, 3> configs;
  for (std::size_t i = 0; i < 3; ++i) {
    configs[i] = block[i].config;
    for (const auto& h : block[i].heads)
      vars[i].push_back({tape.parameter(h.weight), tape.parameter(h.attention)});
  }
  return residual_block_forward(configs, vars, tape.constant(features), graph.mask()).value();
}

Eigen::Vector4d rgat_forward(const RgatModel& model, const DocumentGraph& graph, bool train_mode,
                             std::uint64_t seed, ForwardTrace* trace) {
  ad::Tape tape;
  ModelVars vars = register_parameters(tape, model);
  Var logits = rgat_logits(model, vars, graph, train_mode, seed, trace);
  Eigen::RowVectorXd p = softmax(logits.value().row(0));
  return p.transpose();
}

}  // namespace rgat
