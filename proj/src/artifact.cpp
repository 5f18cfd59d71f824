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

#include "rgat/artifact.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rgat/error.hpp"
#include "rgat/label.hpp"

namespace rgat {

namespace {

using Json = nlohmann::ordered_json;

Json tensor_to_json(const Tensor& t) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < t.cols(); ++c) row.push_back(t(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Tensor tensor_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) throw Error("artifact: parameter '" + name + "' is not a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Tensor t(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("artifact: parameter '" + name + "' has ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw Error("artifact: parameter '" + name + "' holds a non-number");
      t(r, c) = v.get<double>();
    }
  }
  return t;
}

Json layer_config_to_json(const std::string& name, const GatLayerConfig& c) {
  return Json{{"name", name},
              {"in_dim", c.in_dim},
              {"out_dim_per_head", c.out_dim_per_head},
              {"heads", c.heads},
              {"merge", std::string(merge_name(c.merge))},
              {"activation", std::string(activation_name(c.activation))},
              {"leaky_slope", c.leaky_slope}};
}

Json config_to_json(const PipelineConfig& c) {
  return Json{{"seed", c.train.seed},
              {"learning_rate", c.train.learning_rate},
              {"epochs", c.train.epochs},
              {"early_stop_patience", c.train.early_stop_patience},
              {"class_weighting", std::string(weighting_name(c.train.class_weighting))},
              {"l2", c.train.l2},
              {"beta1", c.train.beta1},
              {"beta2", c.train.beta2},
              {"adam_epsilon", c.train.adam_epsilon},
              {"threads", c.train.threads},
              {"val_fraction", c.val_fraction},
              {"max_features", c.max_features},
              {"smote_k", c.smote_k},
              {"mnb_alpha", c.mnb_alpha},
              {"logreg_learning_rate", c.logreg.learning_rate},
              {"logreg_epochs", c.logreg.epochs},
              {"logreg_l2", c.logreg.l2}};
}

void config_from_json(const Json& j, PipelineConfig& c) {
  c.train.seed = j.at("seed").get<std::uint64_t>();
  c.train.learning_rate = j.at("learning_rate").get<double>();
  c.train.epochs = j.at("epochs").get<int>();
  c.train.early_stop_patience = j.at("early_stop_patience").get<int>();
  c.train.class_weighting = parse_weighting(j.at("class_weighting").get<std::string>());
  c.train.l2 = j.at("l2").get<double>();
  c.train.beta1 = j.at("beta1").get<double>();
  c.train.beta2 = j.at("beta2").get<double>();
  c.train.adam_epsilon = j.at("adam_epsilon").get<double>();
  c.train.threads = j.at("threads").get<int>();
  c.val_fraction = j.at("val_fraction").get<double>();
  c.max_features = j.at("max_features").get<std::size_t>();
  c.smote_k = j.at("smote_k").get<int>();
  c.mnb_alpha = j.at("mnb_alpha").get<double>();
  c.logreg.learning_rate = j.at("logreg_learning_rate").get<double>();
  c.logreg.epochs = j.at("logreg_epochs").get<int>();
  c.logreg.l2 = j.at("logreg_l2").get<double>();
}

Json to_json(const ModelArtifact& a) {
  Json j;
  j["format_version"] = a.format_version;
  Json labels = Json::array();
  for (Label l : kAllLabels) labels.push_back(std::string(label_name(l)));
  j["label_map"] = labels;
  j["vocabulary"] = Json{{"ngram_mode", std::string(ngram_mode_name(a.vocab.ngram_mode()))},
                         {"max_features", a.vocab.max_features()},
                         {"n_docs", a.vocab.n_docs()},
                         {"terms", a.vocab.terms()},
                         {"doc_freq", a.vocab.doc_freqs()}};
  j["graph"] = Json{{"tau", a.config.tau}};

  const RgatConfig& m = a.model.config;
  Json layers = Json::array();
  layers.push_back(layer_config_to_json("gat1", a.model.gat1.config));
  layers.push_back(layer_config_to_json("gat2", a.model.gat2.config));
  for (std::size_t b = 0; b < 3; ++b)
    layers.push_back(layer_config_to_json("block" + std::to_string(b + 1), a.model.block[b].config));
  j["model_config"] = Json{{"input_dim", m.input_dim},
                           {"hidden_dim", m.hidden_dim},
                           {"heads", m.heads},
                           {"leaky_slope", m.leaky_slope},
                           {"activation", std::string(activation_name(m.activation))},
                           {"dropout_keep", m.dropout_keep},
                           {"outputs", kNumOutputs},
                           {"layers", layers}};

  Json params = Json::object();
  const auto names = a.model.parameter_names();
  const auto tensors = a.model.parameters();
  for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = tensor_to_json(*tensors[i]);
  j["parameters"] = std::move(params);

  j["train_config"] = config_to_json(a.config);
  j["metrics"] = Json{{"best_epoch", a.summary.best_epoch},
                      {"stopped_epoch", a.summary.stopped_epoch},
                      {"best_val_loss", a.summary.best_val_loss},
                      {"n_train", a.summary.n_train},
                      {"n_val", a.summary.n_val}};
  return j;
}

ModelArtifact from_json(const Json& j) {
  ModelArtifact a;
  a.format_version = j.at("format_version").get<int>();
  if (a.format_version > kArtifactFormatVersion)
    throw Error("artifact format_version " + std::to_string(a.format_version) +
                " is newer than supported version " + std::to_string(kArtifactFormatVersion));
  if (a.format_version < 1) throw Error("artifact: invalid format_version");

  const auto& labels = j.at("label_map");
  if (labels.size() != kNumClasses) throw Error("artifact: label_map must list 4 classes");
  for (Label l : kAllLabels)
    if (labels[static_cast<std::size_t>(code(l))].get<std::string>() != label_name(l))
      throw Error("artifact: label_map does not match the built-in label order");

  const auto& v = j.at("vocabulary");
  a.vocab = Vocabulary(v.at("terms").get<std::vector<std::string>>(),
                       v.at("doc_freq").get<std::vector<std::size_t>>(),
                       v.at("n_docs").get<std::size_t>(),
                       parse_ngram_mode(v.at("ngram_mode").get<std::string>()),
                       v.at("max_features").get<std::size_t>());
  a.config.ngram_mode = a.vocab.ngram_mode();
  a.config.tau = j.at("graph").at("tau").get<double>();

  const auto& mc = j.at("model_config");
  RgatConfig m;
  m.input_dim = mc.at("input_dim").get<int>();
  m.hidden_dim = mc.at("hidden_dim").get<int>();
  m.heads = mc.at("heads").get<int>();
  m.leaky_slope = mc.at("leaky_slope").get<double>();
  m.activation = parse_activation(mc.at("activation").get<std::string>());
  m.dropout_keep = mc.at("dropout_keep").get<double>();
  if (mc.at("outputs").get<int>() != kNumOutputs) throw Error("artifact: model must have 4 outputs");
  m.validate();
  if (static_cast<std::size_t>(m.input_dim) != a.vocab.size())
    throw Error("artifact: input_dim does not match the vocabulary size");
  a.config.model = m;

  // Shapes come from the config; values are then overwritten from the file.
  a.model = init_params(m, 0);
  const auto& layers = mc.at("layers");
  std::vector<const GatLayer*> built = {&a.model.gat1, &a.model.gat2, &a.model.block[0],
                                        &a.model.block[1], &a.model.block[2]};
  if (layers.size() != built.size()) throw Error("artifact: expected 5 layer descriptions");
  for (std::size_t i = 0; i < built.size(); ++i) {
    const auto& lj = layers[i];
    const auto& c = built[i]->config;
    if (lj.at("in_dim").get<int>() != c.in_dim ||
        lj.at("out_dim_per_head").get<int>() != c.out_dim_per_head ||
        lj.at("heads").get<int>() != c.heads ||
        parse_merge(lj.at("merge").get<std::string>()) != c.merge ||
        parse_activation(lj.at("activation").get<std::string>()) != c.activation ||
        lj.at("leaky_slope").get<double>() != c.leaky_slope)
      throw Error("artifact: layer '" + lj.at("name").get<std::string>() +
                  "' does not match the model config");
  }

  const auto& params = j.at("parameters");
  const auto names = a.model.parameter_names();
  auto tensors = a.model.parameters();
  if (params.size() != names.size()) throw Error("artifact: unexpected number of parameters");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!params.contains(names[i])) throw Error("artifact: missing parameter '" + names[i] + "'");
    Tensor t = tensor_from_json(params.at(names[i]), names[i]);
    if (t.rows() != tensors[i]->rows() || t.cols() != tensors[i]->cols())
      throw Error("artifact: parameter '" + names[i] + "' has the wrong shape");
    *tensors[i] = std::move(t);
  }
  a.model.validate();

  config_from_json(j.at("train_config"), a.config);
  const auto& s = j.at("metrics");
  a.summary.best_epoch = s.at("best_epoch").get<int>();
  a.summary.stopped_epoch = s.at("stopped_epoch").get<int>();
  a.summary.best_val_loss = s.at("best_val_loss").get<double>();
  a.summary.n_train = s.at("n_train").get<std::size_t>();
  a.summary.n_val = s.at("n_val").get<std::size_t>();
  return a;
}

}  // namespace

ModelArtifact make_artifact(const TrainedPipeline& trained, const PipelineConfig& config) {
  ModelArtifact a;
  a.vocab = trained.vocab;
  a.model = trained.result.model;
  a.config = config;
  a.config.model = trained.result.model.config;
  a.config.ngram_mode = trained.vocab.ngram_mode();
  const auto& h = trained.result.history;
  a.summary.best_epoch = h.best_epoch;
  a.summary.stopped_epoch = h.stopped_epoch;
  if (h.best_epoch >= 1 && static_cast<std::size_t>(h.best_epoch) <= h.epochs.size())
    a.summary.best_val_loss = h.epochs[static_cast<std::size_t>(h.best_epoch - 1)].val_loss;
  a.summary.n_train = trained.n_train;
  a.summary.n_val = trained.n_val;
  return a;
}

std::string artifact_to_string(const ModelArtifact& artifact) {
  return to_json(artifact).dump(1) + "\n";
}

ModelArtifact artifact_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("artifact: malformed JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("artifact: ") + e.what());
  }
}

void save_artifact(const ModelArtifact& artifact, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write artifact '" + path.string() + "'");
  out << artifact_to_string(artifact);
  if (!out) throw Error("failed writing artifact '" + path.string() + "'");
}

ModelArtifact load_artifact(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open artifact '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return artifact_from_string(buf.str());
}

}  // namespace rgat
