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

#include "rgat/graph.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "rgat/error.hpp"

namespace rgat {

BoolMatrix DocumentGraph::mask() const {
  const auto n = static_cast<Eigen::Index>(n_nodes());
  BoolMatrix m = BoolMatrix::Constant(n, n, false);
  for (const auto& e : edges)
    m(static_cast<Eigen::Index>(e.source), static_cast<Eigen::Index>(e.target)) = true;
  return m;
}

Eigen::MatrixXd DocumentGraph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(n_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : edges)
    a(static_cast<Eigen::Index>(e.source), static_cast<Eigen::Index>(e.target)) = e.weight;
  return a;
}

void DocumentGraph::validate() const {
  const std::size_t n = n_nodes();
  if (n == 0) throw Error("graph has no nodes");
  std::map<std::pair<std::size_t, std::size_t>, double> w;
  for (const auto& e : edges) {
    if (e.source >= n || e.target >= n)
      throw Error("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                  ") out of range for " + std::to_string(n) + " nodes");
    if (!(e.weight >= 0.0 && e.weight <= 1.0)) throw Error("edge weight outside [0,1]");
    if (!w.emplace(std::pair{e.source, e.target}, e.weight).second)
      throw Error("duplicate edge");
  }
  for (const auto& [key, weight] : w) {
    auto it = w.find({key.second, key.first});
    if (it == w.end() || it->second != weight) throw Error("adjacency is not symmetric");
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = w.find({i, i});
    if (it == w.end() || it->second != 1.0)
      throw Error("node " + std::to_string(i) + " lacks a unit self-loop");
  }
}

std::vector<std::size_t> neighbors(const DocumentGraph& graph, std::size_t i) {
  if (i >= graph.n_nodes())
    throw Error("node index " + std::to_string(i) + " out of range for " +
                std::to_string(graph.n_nodes()) + " nodes");
  std::vector<std::size_t> out;
  for (const auto& e : graph.edges)
    if (e.source == i) out.push_back(e.target);
  return out;
}

namespace {

SparseRows stack_rows(const std::vector<FeatureVector>& rows, std::size_t dim) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r].entries)
      triplets.emplace_back(static_cast<int>(r), static_cast<int>(e.index), e.weight);
  SparseRows m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

std::vector<Edge> edges_from_weights(const std::map<std::pair<std::size_t, std::size_t>, double>& w) {
  std::vector<Edge> edges;
  edges.reserve(w.size());
  for (const auto& [key, weight] : w) edges.push_back({key.first, key.second, weight});
  return edges;
}

}  // namespace

DocumentGraph build_graph_from_rows(const std::vector<FeatureVector>& rows, double tau,
                                    std::optional<Label> label) {
  if (rows.empty()) throw Error("cannot build a graph with no nodes");
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error("similarity threshold must lie in [0,1]");
  const std::size_t n = rows.size();
  const std::size_t dim = rows.front().dimension;

  std::map<std::pair<std::size_t, std::size_t>, double> w;
  auto link = [&](std::size_t i, std::size_t j, double weight) {
    for (auto key : {std::pair{i, j}, std::pair{j, i}}) {
      auto [it, inserted] = w.emplace(key, weight);
      if (!inserted) it->second = std::max(it->second, weight);
    }
  };
  for (std::size_t i = 0; i < n; ++i) link(i, i, 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[j].is_zero()) continue;
      double cos = std::clamp(rows[i].dot(rows[j]), 0.0, 1.0);
      if (cos >= tau) link(i, j, cos);
    }
  }

  DocumentGraph g;
  g.node_features = stack_rows(rows, dim);
  g.edges = edges_from_weights(w);
  g.label = label;
  return g;
}

DocumentGraph build_document_graph(const std::vector<SentenceTokens>& sentences,
                                   const Vocabulary& vocab, double tau,
                                   std::optional<Label> label) {
  if (sentences.empty()) throw Error("document has no sentences");
  std::vector<FeatureVector> rows;
  rows.reserve(sentences.size());
  bool any = false;
  for (const auto& s : sentences) {
    rows.push_back(tfidf_transform(s, vocab));
    any = any || !rows.back().is_zero();
  }
  if (!any) {
    FeatureVector zero;
    zero.dimension = vocab.size();
    rows.assign(1, zero);
  }
  return build_graph_from_rows(rows, tau, label);
}

DocumentGraph build_document_graph(const Document& doc, const Vocabulary& vocab, double tau) {
  auto sentences = tokenize_document(doc.text);
  if (sentences.empty()) throw Error("document '" + doc.id + "' has no sentences");
  return build_document_graph(sentences, vocab, tau, doc.label);
}

DocumentGraph permute_nodes(const DocumentGraph& graph, const std::vector<std::size_t>& order) {
  const std::size_t n = graph.n_nodes();
  if (order.size() != n) throw Error("permutation size mismatch");
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || new_index[order[k]] != n) throw Error("not a permutation");
    new_index[order[k]] = k;
  }
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t k = 0; k < n; ++k)
    for (SparseRows::InnerIterator it(graph.node_features, static_cast<Eigen::Index>(order[k])); it; ++it)
      triplets.emplace_back(static_cast<int>(k), static_cast<int>(it.col()), it.value());
  DocumentGraph out;
  out.node_features.resize(graph.node_features.rows(), graph.node_features.cols());
  out.node_features.setFromTriplets(triplets.begin(), triplets.end());
  out.node_features.makeCompressed();
  std::map<std::pair<std::size_t, std::size_t>, double> w;
  for (const auto& e : graph.edges) w[{new_index[e.source], new_index[e.target]}] = e.weight;
  out.edges = edges_from_weights(w);
  out.label = graph.label;
  return out;
}

std::string graph_to_json(const DocumentGraph& graph) {
  nlohmann::ordered_json j;
  j["n_nodes"] = graph.n_nodes();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) edges.push_back({e.source, e.target, e.weight});
  j["edges"] = std::move(edges);
  j["label"] = graph.label ? nlohmann::ordered_json(std::string(label_name(*graph.label)))
                           : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace rgat
