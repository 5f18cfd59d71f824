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

#include <string>
#include <string_view>
#include <vector>

namespace rgat {

/// Normalized terms of one sentence: lowercase, stopwords removed, stemmed.
/// Every token has length >= 2 and none is a stopword.
struct SentenceTokens {
  std::vector<std::string> tokens;

  bool operator==(const SentenceTokens&) const = default;
};

/// Splits at '.', '!' or '?' when followed by whitespace or end of text.
/// A period directly after a single letter that itself follows a period
/// ("e.g.", "i.e.", "U.S.") never splits. Segments are trimmed and empty
/// segments dropped.
std::vector<std::string> split_sentences(std::string_view text);

/// Lowercases ASCII, splits on runs of non-alphanumeric bytes (bytes >= 0x80
/// included), drops tokens shorter than 2, pure numbers and stopwords, then
/// stems. A stemmed form that is short or a stopword is dropped as well.
SentenceTokens tokenize(std::string_view sentence);

/// split_sentences followed by tokenize on each sentence.
std::vector<SentenceTokens> tokenize_document(std::string_view text);

bool is_stopword(std::string_view word);
const std::vector<std::string>& stopword_list();

}  // namespace rgat
