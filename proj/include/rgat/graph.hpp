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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rgat/corpus.hpp"
#include "rgat/label.hpp"
#include "rgat/tfidf.hpp"

namespace rgat {

using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kDefaultSimilarityThreshold = 0.35;

struct Edge {
  std::size_t source;
  std::size_t target;
  double weight;
  bool operator==(const Edge&) const = default;
};

/// One document as a graph of sentence nodes.
///
/// Invariants: N >= 1, the edge list is symmetric with equal weights in both
/// directions, every node carries a self-loop of weight 1, all weights lie
/// in [0, 1], and edges are sorted by (source, target).
struct DocumentGraph {
  SparseRows node_features;  // N x F sentence TF-IDF rows
  std::vector<Edge> edges;
  std::optional<Label> label;

  std::size_t n_nodes() const { return static_cast<std::size_t>(node_features.rows()); }
  std::size_t n_features() const { return static_cast<std::size_t>(node_features.cols()); }

  /// Neighbourhood mask: mask(i, j) is true iff edge (i, j) exists.
  BoolMatrix mask() const;
  /// Dense weighted adjacency A.
  Eigen::MatrixXd adjacency() const;

  /// Throws rgat::Error if any invariant is violated.
  void validate() const;
};

/// Neighbour set of node i, ascending; always contains i.
std::vector<std::size_t> neighbors(const DocumentGraph& graph, std::size_t i);

/// Builds edges over given sentence rows: sequential links (i, i+1) with
/// weight 1, cosine links where cos >= tau, self-loops; duplicates keep the
/// maximum weight.
DocumentGraph build_graph_from_rows(const std::vector<FeatureVector>& rows, double tau,
                                    std::optional<Label> label = std::nullopt);

/// One node per sentence of `doc`. If every sentence is out of vocabulary
/// the result is a single node with a zero feature row. Throws when the text
/// has no sentences.
DocumentGraph build_document_graph(const Document& doc, const Vocabulary& vocab,
                                   double tau = kDefaultSimilarityThreshold);

/// Same, for pre-tokenized sentences.
DocumentGraph build_document_graph(const std::vector<SentenceTokens>& sentences,
                                   const Vocabulary& vocab, double tau,
                                   std::optional<Label> label);

/// Node `n` of the result is node `order[n]` of the input.
DocumentGraph permute_nodes(const DocumentGraph& graph, const std::vector<std::size_t>& order);

/// Debug dump: {"n_nodes":N,"edges":[[i,j,w],...],"label":"..."}.
std::string graph_to_json(const DocumentGraph& graph);

}  // namespace rgat
