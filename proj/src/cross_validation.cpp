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

#include "rgat/cross_validation.hpp"

#include <algorithm>
#include <cmath>

#include "rgat/error.hpp"
#include "rgat/parallel.hpp"
#include "rgat/rng.hpp"
#include "rgat/smote.hpp"

namespace rgat {

namespace {

std::vector<std::vector<SentenceTokens>> tokenize_corpus(const Corpus& corpus, int threads) {
  std::vector<std::vector<SentenceTokens>> out(corpus.size());
  parallel_for(corpus.size(), threads,
               [&](std::size_t i) { out[i] = tokenize_document(corpus[i].text); });
  return out;
}

std::vector<std::vector<SentenceTokens>> pick(const std::vector<std::vector<SentenceTokens>>& all,
                                              const std::vector<std::size_t>& indices) {
  std::vector<std::vector<SentenceTokens>> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(all[i]);
  return out;
}

std::vector<Label> labels_of(const Corpus& corpus, const std::vector<std::size_t>& indices) {
  std::vector<Label> out;
  for (auto i : indices) out.push_back(*corpus[i].label);
  return out;
}

void report(const ProgressFn& progress, const std::string& message) {
  if (progress) progress(message);
}

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_holdout(
    const Corpus& corpus, const std::vector<std::size_t>& indices, double fraction,
    std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw Error("validation fraction must lie in (0, 1)");
  std::vector<bool> held(corpus.size(), false);
  for (Label label : kAllLabels) {
    std::vector<std::size_t> members;
    for (auto i : indices)
      if (corpus[i].label == label) members.push_back(i);
    Rng rng(seed, "holdout", static_cast<std::uint64_t>(code(label)));
    rng.shuffle(std::span<std::size_t>(members));
    std::size_t take = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(members.size())));
    if (members.size() >= 2) take = std::clamp<std::size_t>(take, 1, members.size() - 1);
    else take = 0;
    for (std::size_t t = 0; t < take; ++t) held[members[t]] = true;
  }
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
  for (auto i : indices) (held[i] ? out.second : out.first).push_back(i);
  return out;
}

std::vector<DocumentGraph> build_graphs(const std::vector<std::vector<SentenceTokens>>& tokens,
                                        const Corpus& corpus,
                                        const std::vector<std::size_t>& indices,
                                        const Vocabulary& vocab, double tau) {
  std::vector<DocumentGraph> out(indices.size());
  parallel_for(indices.size(), 0, [&](std::size_t k) {
    const auto i = indices[k];
    if (tokens[i].empty()) throw Error("document '" + corpus[i].id + "' has no sentences");
    out[k] = build_document_graph(tokens[i], vocab, tau, corpus[i].label);
  });
  return out;
}

TrainedPipeline train_pipeline(const Corpus& corpus, const PipelineConfig& config,
                               const ProgressFn& progress) {
  corpus.require_labeled();
  const auto tokens = tokenize_corpus(corpus, config.train.threads);
  std::vector<std::size_t> all(corpus.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto [train_idx, val_idx] =
      stratified_holdout(corpus, all, config.val_fraction, derive_seed(config.train.seed, "val-split"));

  TrainedPipeline out;
  out.vocab = fit_vocabulary(pick(tokens, all), config.ngram_mode, config.max_features);
  report(progress, "vocabulary: " + std::to_string(out.vocab.size()) + " terms");
  auto train_graphs = build_graphs(tokens, corpus, train_idx, out.vocab, config.tau);
  auto val_graphs = build_graphs(tokens, corpus, val_idx, out.vocab, config.tau);
  out.n_train = train_graphs.size();
  out.n_val = val_graphs.size();
  report(progress, "training on " + std::to_string(out.n_train) + " graphs, validating on " +
                       std::to_string(out.n_val));
  out.result = train(train_graphs, val_graphs, config.model, config.train);
  return out;
}

Spread spread(const std::vector<double>& values) {
  Spread s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stdev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

CvSummary summarize(const std::vector<FoldResult>& folds) {
  CvSummary s;
  std::vector<double> macro, acc;
  std::array<std::vector<double>, kNumClasses> p, r, f;
  for (const auto& fold : folds) {
    macro.push_back(fold.metrics.macro_f1);
    acc.push_back(fold.metrics.accuracy);
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      p[c].push_back(fold.metrics.per_class[c].precision);
      r[c].push_back(fold.metrics.per_class[c].recall);
      f[c].push_back(fold.metrics.per_class[c].f1);
    }
    s.pooled += fold.confusion;
  }
  s.macro_f1 = spread(macro);
  s.accuracy = spread(acc);
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    s.precision[c] = spread(p[c]);
    s.recall[c] = spread(r[c]);
    s.f1[c] = spread(f[c]);
  }
  return s;
}

CvResult cross_validate(const Corpus& corpus, const PipelineConfig& config, int k,
                        std::uint64_t seed, const ProgressFn& progress) {
  corpus.require_labeled();
  const FoldPlan plan = stratified_kfold(corpus, k, seed);
  const auto tokens = tokenize_corpus(corpus, config.train.threads);

  CvResult out;
  for (int fold = 0; fold < k; ++fold) {
    const auto test_idx = plan.fold_indices(corpus, fold);
    const auto rest_idx = plan.complement_indices(corpus, fold);
    auto [train_idx, val_idx] = stratified_holdout(
        corpus, rest_idx, config.val_fraction, derive_seed(seed, "val-split", static_cast<std::uint64_t>(fold)));

    const Vocabulary vocab = fit_vocabulary(pick(tokens, rest_idx), config.ngram_mode, config.max_features);
    auto train_graphs = build_graphs(tokens, corpus, train_idx, vocab, config.tau);
    auto val_graphs = build_graphs(tokens, corpus, val_idx, vocab, config.tau);
    auto test_graphs = build_graphs(tokens, corpus, test_idx, vocab, config.tau);

    TrainConfig tc = config.train;
    tc.seed = derive_seed(seed, "fold-train", static_cast<std::uint64_t>(fold));
    report(progress, "fold " + std::to_string(fold + 1) + "/" + std::to_string(k) + ": " +
                         std::to_string(train_graphs.size()) + " train, " +
                         std::to_string(val_graphs.size()) + " val, " +
                         std::to_string(test_graphs.size()) + " test, " +
                         std::to_string(vocab.size()) + " terms");
    TrainResult trained = train(train_graphs, val_graphs, config.model, tc);
    Evaluation eval = evaluate(trained.model, test_graphs, tc.threads);

    FoldResult r;
    r.fold = fold;
    r.metrics = eval.metrics;
    r.confusion = eval.confusion;
    r.history = std::move(trained.history);
    r.vocab_size = vocab.size();
    r.n_train = train_graphs.size();
    r.n_val = val_graphs.size();
    r.n_test = test_graphs.size();
    report(progress, "fold " + std::to_string(fold + 1) + ": macro-F1 " +
                         std::to_string(r.metrics.macro_f1) + " after " +
                         std::to_string(r.history.stopped_epoch) + " epochs");
    out.folds.push_back(std::move(r));
  }
  out.summary = summarize(out.folds);
  return out;
}

BaselineCvResult cross_validate_baselines(const Corpus& corpus, const PipelineConfig& config,
                                          int k, std::uint64_t seed, const ProgressFn& progress) {
  corpus.require_labeled();
  const FoldPlan plan = stratified_kfold(corpus, k, seed);
  const auto tokens = tokenize_corpus(corpus, config.train.threads);

  BaselineCvResult out;
  for (int fold = 0; fold < k; ++fold) {
    const auto test_idx = plan.fold_indices(corpus, fold);
    const auto train_idx = plan.complement_indices(corpus, fold);
    const Vocabulary vocab = fit_vocabulary(pick(tokens, train_idx), config.ngram_mode, config.max_features);
    const Eigen::MatrixXd train_rows = tfidf_matrix(pick(tokens, train_idx), vocab);
    const Eigen::MatrixXd test_rows = tfidf_matrix(pick(tokens, test_idx), vocab);
    const auto test_labels = labels_of(corpus, test_idx);

    SmoteResult balanced = smote_oversample(train_rows, labels_of(corpus, train_idx), config.smote_k,
                                            derive_seed(seed, "smote", static_cast<std::uint64_t>(fold)));
    report(progress, "baseline fold " + std::to_string(fold + 1) + "/" + std::to_string(k) + ": " +
                         std::to_string(balanced.labels.size()) + " balanced training rows");

    auto score = [&](auto&& predict_row) {
      std::vector<Label> predicted;
      for (Eigen::Index i = 0; i < test_rows.rows(); ++i)
        predicted.push_back(predict_row(Eigen::VectorXd(test_rows.row(i).transpose())));
      FoldResult r;
      r.fold = fold;
      r.confusion = confusion_from(test_labels, predicted);
      r.metrics = compute_metrics(r.confusion);
      r.vocab_size = vocab.size();
      r.n_train = balanced.labels.size();
      r.n_test = test_labels.size();
      return r;
    };

    const MultinomialNb nb = mnb_train(balanced.rows, balanced.labels, config.mnb_alpha);
    out.naive_bayes.push_back(score([&](const Eigen::VectorXd& x) { return mnb_predict(nb, x); }));

    LogRegConfig lc = config.logreg;
    lc.seed = derive_seed(seed, "logreg", static_cast<std::uint64_t>(fold));
    const SoftmaxRegression lr = logreg_train(balanced.rows, balanced.labels, lc);
    out.logistic_regression.push_back(
        score([&](const Eigen::VectorXd& x) { return logreg_predict(lr, x); }));
  }
  return out;
}

}  // namespace rgat
