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
#include <functional>
#include <string>
#include <vector>

#include "rgat/baselines.hpp"
#include "rgat/corpus.hpp"
#include "rgat/graph.hpp"
#include "rgat/metrics.hpp"
#include "rgat/tfidf.hpp"
#include "rgat/train.hpp"

namespace rgat {

/// Every tunable of the pipeline; mirrors the flat config file.
struct PipelineConfig {
  NgramMode ngram_mode = NgramMode::kUnigram;
  std::size_t max_features = kDefaultMaxFeatures;
  double tau = kDefaultSimilarityThreshold;
  RgatConfig model;
  TrainConfig train;
  /// Share of each class in the training documents held out for early stopping.
  double val_fraction = 0.1;
  int smote_k = 5;
  double mnb_alpha = 1.0;
  LogRegConfig logreg;
};

using ProgressFn = std::function<void(const std::string&)>;

/// Stratified split of `indices` (into `corpus`): from each class,
/// round(fraction * n_c) documents (at least one when n_c >= 2) go to the
/// second list.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_holdout(
    const Corpus& corpus, const std::vector<std::size_t>& indices, double fraction,
    std::uint64_t seed);

std::vector<DocumentGraph> build_graphs(const std::vector<std::vector<SentenceTokens>>& tokens,
                                        const Corpus& corpus,
                                        const std::vector<std::size_t>& indices,
                                        const Vocabulary& vocab, double tau);

/// Fits the vocabulary on all of `corpus`, holds out a validation split and
/// trains the graph model.
struct TrainedPipeline {
  Vocabulary vocab;
  TrainResult result;
  std::size_t n_train = 0;
  std::size_t n_val = 0;
};
TrainedPipeline train_pipeline(const Corpus& corpus, const PipelineConfig& config,
                               const ProgressFn& progress = {});

struct FoldResult {
  int fold = 0;
  Metrics metrics;
  ConfusionMatrix confusion;
  TrainHistory history;
  std::size_t vocab_size = 0;
  std::size_t n_train = 0, n_val = 0, n_test = 0;
};

struct Spread {
  double mean = 0.0;
  double stdev = 0.0;  // sample standard deviation (n - 1)
};
Spread spread(const std::vector<double>& values);

struct CvSummary {
  Spread macro_f1;
  Spread accuracy;
  std::array<Spread, kNumClasses> precision, recall, f1;
  ConfusionMatrix pooled;  // sum over folds
};

struct CvResult {
  std::vector<FoldResult> folds;
  CvSummary summary;
};

CvSummary summarize(const std::vector<FoldResult>& folds);

/// k-fold evaluation of the graph model. Per fold, the vocabulary and idf are
/// fitted on the training folds only, graphs are rebuilt, and a stratified
/// `val_fraction` of the training documents drives early stopping.
CvResult cross_validate(const Corpus& corpus, const PipelineConfig& config, int k,
                        std::uint64_t seed, const ProgressFn& progress = {});

struct BaselineCvResult {
  std::vector<FoldResult> naive_bayes;
  std::vector<FoldResult> logistic_regression;
};

/// Same protocol for the TF-IDF baselines; SMOTE balances each training
/// fold, evaluation folds are never resampled.
BaselineCvResult cross_validate_baselines(const Corpus& corpus, const PipelineConfig& config,
                                          int k, std::uint64_t seed,
                                          const ProgressFn& progress = {});

}  // namespace rgat
