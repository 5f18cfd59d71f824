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

#include "rgat/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "rgat/error.hpp"

namespace rgat {

std::string_view ngram_mode_name(NgramMode mode) {
  return mode == NgramMode::kUnigram ? "unigram" : "unigram+bigram";
}

NgramMode parse_ngram_mode(std::string_view name) {
  if (name == "unigram") return NgramMode::kUnigram;
  if (name == "unigram+bigram" || name == "bigram") return NgramMode::kUnigramBigram;
  throw Error("unknown ngram mode '" + std::string(name) + "'");
}

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
                       std::size_t n_docs, NgramMode mode, std::size_t max_features)
    : terms_(std::move(terms)),
      doc_freq_(std::move(doc_freq)),
      n_docs_(n_docs),
      mode_(mode),
      max_features_(max_features) {
  if (terms_.size() != doc_freq_.size()) throw Error("vocabulary terms/doc_freq size mismatch");
  if (terms_.size() > max_features_) throw Error("vocabulary exceeds max_features");
  idf_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], i).second)
      throw Error("duplicate vocabulary term '" + terms_[i] + "'");
    idf_.push_back(std::log((1.0 + static_cast<double>(n_docs_)) /
                            (1.0 + static_cast<double>(doc_freq_[i]))) +
                   1.0);
  }
}

long Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(term);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Eigen::VectorXd FeatureVector::to_dense() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension));
  for (const auto& e : entries) v[static_cast<Eigen::Index>(e.index)] = e.weight;
  return v;
}

double FeatureVector::dot(const FeatureVector& other) const {
  double sum = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->index < b->index) ++a;
    else if (b->index < a->index) ++b;
    else {
      sum += a->weight * b->weight;
      ++a;
      ++b;
    }
  }
  return sum;
}

std::vector<std::string> unit_terms(const std::vector<SentenceTokens>& sentences,
                                    NgramMode mode) {
  std::vector<std::string> out;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) out.push_back(t);
    if (mode == NgramMode::kUnigramBigram)
      for (std::size_t i = 0; i + 1 < s.tokens.size(); ++i)
        out.push_back(s.tokens[i] + " " + s.tokens[i + 1]);
  }
  return out;
}

Vocabulary fit_vocabulary(const std::vector<std::vector<SentenceTokens>>& documents,
                          NgramMode mode, std::size_t max_features) {
  if (documents.empty()) throw Error("cannot fit a vocabulary on an empty corpus");
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    auto terms = unit_terms(doc, mode);
    std::set<std::string> unique(terms.begin(), terms.end());
    for (const auto& t : unique) ++df[t];
  }
  if (df.empty()) throw Error("no terms survived tokenization; cannot fit a vocabulary");
  std::vector<std::pair<std::string, std::size_t>> ranked(df.begin(), df.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_features) ranked.resize(max_features);
  std::vector<std::string> terms;
  std::vector<std::size_t> freqs;
  for (auto& [term, count] : ranked) {
    terms.push_back(term);
    freqs.push_back(count);
  }
  return Vocabulary(std::move(terms), std::move(freqs), documents.size(), mode, max_features);
}

Vocabulary fit_vocabulary(const Corpus& corpus, NgramMode mode, std::size_t max_features) {
  std::vector<std::vector<SentenceTokens>> docs;
  docs.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) docs.push_back(tokenize_document(doc.text));
  return fit_vocabulary(docs, mode, max_features);
}

FeatureVector tfidf_transform(const std::vector<SentenceTokens>& unit, const Vocabulary& vocab) {
  std::map<std::size_t, double> counts;
  for (const auto& term : unit_terms(unit, vocab.ngram_mode())) {
    long idx = vocab.index_of(term);
    if (idx >= 0) counts[static_cast<std::size_t>(idx)] += 1.0;
  }
  FeatureVector fv;
  fv.dimension = vocab.size();
  double norm_sq = 0.0;
  for (auto [idx, tf] : counts) {
    double w = tf * vocab.idf(idx);
    fv.entries.push_back({idx, w});
    norm_sq += w * w;
  }
  if (norm_sq > 0.0) {
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& e : fv.entries) e.weight *= inv;
  }
  return fv;
}

FeatureVector tfidf_transform(const SentenceTokens& sentence, const Vocabulary& vocab) {
  return tfidf_transform(std::vector<SentenceTokens>{sentence}, vocab);
}

Eigen::MatrixXd tfidf_matrix(const std::vector<std::vector<SentenceTokens>>& documents,
                             const Vocabulary& vocab) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(documents.size()),
                                              static_cast<Eigen::Index>(vocab.size()));
  for (std::size_t d = 0; d < documents.size(); ++d)
    for (const auto& e : tfidf_transform(documents[d], vocab).entries)
      out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(e.index)) = e.weight;
  return out;
}

}  // namespace rgat
