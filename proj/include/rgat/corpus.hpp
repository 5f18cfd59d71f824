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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgat/label.hpp"

namespace rgat {

struct Document {
  std::string id;
  std::string text;
  std::optional<Label> label;  // absent only for inference inputs

  bool operator==(const Document&) const = default;
};

enum class CorpusFormat { kJsonl, kCsv };

/// Picks the format from the file extension (".csv" -> CSV, else JSONL).
CorpusFormat format_for_path(const std::filesystem::path& path);

/// Ordered collection of documents with unique ids.
class Corpus {
 public:
  Corpus() = default;
  /// Throws rgat::Error on duplicate ids or whitespace-only text.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  const Document& operator[](std::size_t i) const { return documents_[i]; }

  /// Per-class counts over labeled documents, indexed by label code.
  const std::array<std::size_t, kNumClasses>& class_counts() const {
    return class_counts_;
  }
  std::size_t labeled_count() const;

  /// Throws unless every document carries a label (training entry points).
  void require_labeled() const;

  /// Subset in the given index order.
  Corpus subset(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<Document> documents_;
  std::array<std::size_t, kNumClasses> class_counts_{};
};

Corpus read_corpus(std::istream& in, CorpusFormat format);
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);
Corpus load_corpus(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const Corpus& corpus, CorpusFormat format);
void save_corpus(const std::filesystem::path& path, const Corpus& corpus,
                 CorpusFormat format);

/// Fold assignment for stratified k-fold cross-validation.
struct FoldPlan {
  int k = 0;
  std::uint64_t seed = 0;
  std::map<std::string, int> assignments;  // document id -> fold

  /// Corpus indices of the documents in `fold`, in corpus order.
  std::vector<std::size_t> fold_indices(const Corpus& corpus, int fold) const;
  /// Corpus indices of labeled documents outside `fold`, in corpus order.
  std::vector<std::size_t> complement_indices(const Corpus& corpus,
                                              int fold) const;
};

/// Per-class shuffle with the seed, then round-robin dealing into k folds.
/// The dealing position carries over from one class to the next so fold
/// sizes stay within one document of each other. Unlabeled documents are
/// not assigned.
FoldPlan stratified_kfold(const Corpus& corpus, int k, std::uint64_t seed);

}  // namespace rgat
