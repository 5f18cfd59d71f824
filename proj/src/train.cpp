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

#include "rgat/train.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rgat/error.hpp"
#include "rgat/parallel.hpp"
#include "rgat/rng.hpp"

namespace rgat {

std::string_view weighting_name(ClassWeighting weighting) {
  return weighting == ClassWeighting::kInverseFrequency ? "inverse_frequency" : "none";
}

ClassWeighting parse_weighting(std::string_view name) {
  if (name == "inverse_frequency") return ClassWeighting::kInverseFrequency;
  if (name == "none") return ClassWeighting::kNone;
  throw Error("unknown class weighting '" + std::string(name) + "'");
}

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw Error("learning_rate must be positive");
  if (epochs < 1) throw Error("epochs must be at least 1");
  if (early_stop_patience < 1) throw Error("early_stop_patience must be at least 1");
  if (!(l2 >= 0.0)) throw Error("l2 must be non-negative");
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0))
    throw Error("adam betas must lie in [0, 1)");
}

std::array<double, kNumClasses> class_weights(const std::vector<DocumentGraph>& graphs,
                                              ClassWeighting weighting) {
  std::array<std::size_t, kNumClasses> counts{};
  for (const auto& g : graphs) {
    if (!g.label) throw Error("training graph without a label");
    ++counts[static_cast<std::size_t>(code(*g.label))];
  }
  std::array<double, kNumClasses> w{};
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    if (counts[c] == 0) continue;
    w[c] = weighting == ClassWeighting::kNone
               ? 1.0
               : static_cast<double>(graphs.size()) / (4.0 * static_cast<double>(counts[c]));
  }
  return w;
}

namespace {

constexpr std::size_t kMaxChunks = 16;

std::vector<Tensor> zeros_like(const RgatModel& model) {
  std::vector<Tensor> out;
  for (const Tensor* p : model.parameters()) out.push_back(Tensor::Zero(p->rows(), p->cols()));
  return out;
}

struct Range {
  std::size_t begin, end;
};

std::vector<Range> chunk_ranges(std::size_t n) {
  const std::size_t chunks = std::min(kMaxChunks, std::max<std::size_t>(n, 1));
  std::vector<Range> out;
  for (std::size_t c = 0; c < chunks; ++c) out.push_back({c * n / chunks, (c + 1) * n / chunks});
  return out;
}

double total_weight(const std::vector<DocumentGraph>& graphs,
                    const std::array<double, kNumClasses>& weights) {
  double total = 0.0;
  for (const auto& g : graphs) total += weights[static_cast<std::size_t>(code(*g.label))];
  if (!(total > 0.0)) throw Error("graphs carry zero total class weight");
  return total;
}

/// Weighted loss and (optionally) its gradient. Chunk boundaries are fixed by
/// the graph count, and chunk results are reduced in order, so the output
/// does not depend on the thread count.
double batch_loss(const RgatModel& model, const std::vector<DocumentGraph>& graphs,
                  const std::array<double, kNumClasses>& weights, bool train_mode,
                  std::uint64_t dropout_seed, int threads, std::vector<Tensor>* gradient) {
  const double norm = total_weight(graphs, weights);
  const auto ranges = chunk_ranges(graphs.size());
  std::vector<double> chunk_loss(ranges.size(), 0.0);
  std::vector<std::vector<Tensor>> chunk_grad(gradient ? ranges.size() : 0);

  parallel_for(ranges.size(), threads, [&](std::size_t c) {
    if (gradient) chunk_grad[c] = zeros_like(model);
    ad::Tape tape;
    for (std::size_t i = ranges[c].begin; i < ranges[c].end; ++i) {
      const auto& g = graphs[i];
      const double w = weights[static_cast<std::size_t>(code(*g.label))] / norm;
      ModelVars vars = register_parameters(tape, model);
      ad::Var logits =
          rgat_logits(model, vars, g, train_mode, derive_seed(dropout_seed, "graph", i));
      ad::Var ce = ad::cross_entropy_with_logits(logits, code(*g.label));
      chunk_loss[c] += w * ce.value()(0, 0);
      if (gradient) tape.backward_into(ce, chunk_grad[c], w);
      else tape.reset();
    }
  });

  double loss = 0.0;
  for (std::size_t c = 0; c < ranges.size(); ++c) {
    loss += chunk_loss[c];
    if (gradient)
      for (std::size_t p = 0; p < gradient->size(); ++p) (*gradient)[p] += chunk_grad[c][p];
  }
  return loss;
}

void require_all_classes(const std::vector<DocumentGraph>& graphs) {
  std::array<bool, kNumClasses> seen{};
  for (const auto& g : graphs) {
    if (!g.label) throw Error("training graph without a label");
    seen[static_cast<std::size_t>(code(*g.label))] = true;
  }
  for (Label l : kAllLabels)
    if (!seen[static_cast<std::size_t>(code(l))])
      throw Error("class '" + std::string(label_name(l)) + "' is missing from the training data");
}

}  // namespace

double weighted_loss(const RgatModel& model, const std::vector<DocumentGraph>& graphs,
                     const std::array<double, kNumClasses>& weights, int threads) {
  if (graphs.empty()) throw Error("weighted_loss: no graphs");
  for (const auto& g : graphs)
    if (!g.label) throw Error("weighted_loss: unlabeled graph");
  return batch_loss(model, graphs, weights, false, 0, threads, nullptr);
}

TrainResult train(const std::vector<DocumentGraph>& graphs,
                  const std::vector<DocumentGraph>& val_graphs, RgatConfig model_config,
                  const TrainConfig& config) {
  config.validate();
  if (graphs.empty()) throw Error("train: no training graphs");
  if (val_graphs.empty()) throw Error("train: no validation graphs");
  require_all_classes(graphs);
  for (const auto& g : val_graphs)
    if (!g.label) throw Error("validation graph without a label");
  model_config.input_dim = static_cast<int>(graphs.front().n_features());

  RgatModel model = init_params(model_config, derive_seed(config.seed, "init"));
  const auto weights = class_weights(graphs, config.class_weighting);
  auto params = model.parameters();
  std::vector<Tensor> m = zeros_like(model), v = zeros_like(model);
  std::vector<Tensor> best;
  for (const Tensor* p : params) best.push_back(*p);
  double best_val = std::numeric_limits<double>::infinity();
  int since_best = 0;

  TrainResult result;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::vector<Tensor> grad = zeros_like(model);
    const double train_loss =
        batch_loss(model, graphs, weights, true,
                   derive_seed(config.seed, "dropout", static_cast<std::uint64_t>(epoch)),
                   config.threads, &grad);
    if (!std::isfinite(train_loss))
      throw Error("non-finite training loss at epoch " + std::to_string(epoch));

    const double bc1 = 1.0 - std::pow(config.beta1, epoch);
    const double bc2 = 1.0 - std::pow(config.beta2, epoch);
    for (std::size_t p = 0; p < params.size(); ++p) {
      Tensor g = grad[p] + 2.0 * config.l2 * *params[p];
      m[p] = config.beta1 * m[p] + (1.0 - config.beta1) * g;
      v[p] = config.beta2 * v[p] + (1.0 - config.beta2) * g.cwiseProduct(g);
      params[p]->array() -= config.learning_rate * (m[p].array() / bc1) /
                            ((v[p].array() / bc2).sqrt() + config.adam_epsilon);
    }

    const double val_loss = weighted_loss(model, val_graphs, weights, config.threads);
    if (!std::isfinite(val_loss))
      throw Error("non-finite validation loss at epoch " + std::to_string(epoch));
    result.history.epochs.push_back({train_loss, val_loss});
    result.history.stopped_epoch = epoch;

    if (val_loss < best_val) {
      best_val = val_loss;
      result.history.best_epoch = epoch;
      for (std::size_t p = 0; p < params.size(); ++p) best[p] = *params[p];
      since_best = 0;
    } else if (++since_best >= config.early_stop_patience) {
      break;
    }
  }
  for (std::size_t p = 0; p < params.size(); ++p) *params[p] = best[p];
  result.model = std::move(model);
  return result;
}

Label predict(const RgatModel& model, const DocumentGraph& graph) {
  return label_from_code(static_cast<int>(argmax(rgat_forward(model, graph, false, 0))));
}

Evaluation evaluate(const RgatModel& model, const std::vector<DocumentGraph>& graphs, int threads) {
  if (graphs.empty()) throw Error("evaluate: no graphs");
  for (const auto& g : graphs)
    if (!g.label) throw Error("evaluate: unlabeled graph");
  Evaluation out;
  out.predictions.resize(graphs.size());
  parallel_for(graphs.size(), threads,
               [&](std::size_t i) { out.predictions[i] = predict(model, graphs[i]); });
  for (std::size_t i = 0; i < graphs.size(); ++i) out.confusion.add(*graphs[i].label, out.predictions[i]);
  out.metrics = compute_metrics(out.confusion);
  return out;
}

}  // namespace rgat
