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
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rgat/corpus.hpp"
#include "rgat/text.hpp"

namespace rgat {

enum class NgramMode { kUnigram, kUnigramBigram };

std::string_view ngram_mode_name(NgramMode mode);
/// Accepts "unigram" and "unigram+bigram" (alias "bigram").
NgramMode parse_ngram_mode(std::string_view name);

inline constexpr std::size_t kDefaultMaxFeatures = 5000;

/// Term index with document frequencies. Index order is document frequency
/// descending, ties broken by ascending term.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Rebuilds a fitted vocabulary; terms are given in index order.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
             std::size_t n_docs, NgramMode mode, std::size_t max_features);

  std::size_t size() const { return terms_.size(); }
  std::size_t n_docs() const { return n_docs_; }
  NgramMode ngram_mode() const { return mode_; }
  std::size_t max_features() const { return max_features_; }

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::size_t>& doc_freqs() const { return doc_freq_; }

  /// -1 when the term is out of vocabulary.
  long index_of(std::string_view term) const;
  std::size_t doc_freq(std::size_t index) const { return doc_freq_[index]; }
  /// Smoothed idf: ln((1 + n_docs) / (1 + df)) + 1.
  double idf(std::size_t index) const { return idf_[index]; }

  bool operator==(const Vocabulary& other) const {
    return terms_ == other.terms_ && doc_freq_ == other.doc_freq_ &&
           n_docs_ == other.n_docs_ && mode_ == other.mode_ &&
           max_features_ == other.max_features_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  std::vector<std::string> terms_;
  std::vector<std::size_t> doc_freq_;
  std::vector<double> idf_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> index_;
  std::size_t n_docs_ = 0;
  NgramMode mode_ = NgramMode::kUnigram;
  std::size_t max_features_ = kDefaultMaxFeatures;
};

/// Sparse L2-normalized row. Indices strictly increasing; the vector is
/// either unit-norm or all zero.
struct FeatureVector {
  struct Entry {
    std::size_t index;
    double weight;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  std::size_t dimension = 0;

  bool is_zero() const { return entries.empty(); }
  Eigen::VectorXd to_dense() const;
  double dot(const FeatureVector& other) const;
};

/// Terms contributed by one unit: unigrams plus, in bigram mode, adjacent
/// token pairs joined by a single space. Bigrams never cross sentences.
std::vector<std::string> unit_terms(const std::vector<SentenceTokens>& sentences,
                                    NgramMode mode);

/// Fits on pre-tokenized documents. Throws when no term survives.
Vocabulary fit_vocabulary(const std::vector<std::vector<SentenceTokens>>& documents,
                          NgramMode mode, std::size_t max_features = kDefaultMaxFeatures);
Vocabulary fit_vocabulary(const Corpus& corpus, NgramMode mode,
                          std::size_t max_features = kDefaultMaxFeatures);

/// tf = raw count in the unit, weight = tf * idf, then L2 normalization.
/// Out-of-vocabulary terms are ignored.
FeatureVector tfidf_transform(const std::vector<SentenceTokens>& unit, const Vocabulary& vocab);
FeatureVector tfidf_transform(const SentenceTokens& sentence, const Vocabulary& vocab);

/// Document-level TF-IDF rows (one per document), stacked densely.
Eigen::MatrixXd tfidf_matrix(const std::vector<std::vector<SentenceTokens>>& documents,
                             const Vocabulary& vocab);

}  // namespace rgat
