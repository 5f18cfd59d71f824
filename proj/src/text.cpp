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

#include "rgat/text.hpp"

#include <algorithm>
#include <cctype>

#include "rgat/stemmer.hpp"

namespace rgat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalpha(u) != 0;
}
bool is_alnum(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalnum(u) != 0;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// True for the final period of dotted abbreviations like "e.g." and "U.S.".
bool abbreviation_period(std::string_view text, std::size_t pos) {
  return pos >= 2 && is_alpha(text[pos - 1]) && text[pos - 2] == '.';
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    bool boundary = i + 1 == text.size() || is_space(text[i + 1]);
    if (!boundary) continue;
    if (c == '.' && abbreviation_period(text, i)) continue;
    emit(i + 1);
  }
  emit(text.size());
  return out;
}

SentenceTokens tokenize(std::string_view sentence) {
  SentenceTokens result;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && !is_alnum(sentence[i])) ++i;
    std::size_t b = i;
    while (i < sentence.size() && is_alnum(sentence[i])) ++i;
    if (b == i) continue;
    std::string word(sentence.substr(b, i - b));
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (word.size() < 2) continue;
    if (std::all_of(word.begin(), word.end(),
                    [](unsigned char ch) { return std::isdigit(ch) != 0; }))
      continue;
    if (is_stopword(word)) continue;
    std::string stem = porter_stem(word);
    if (stem.size() < 2 || is_stopword(stem)) continue;
    result.tokens.push_back(std::move(stem));
  }
  return result;
}

std::vector<SentenceTokens> tokenize_document(std::string_view text) {
  std::vector<SentenceTokens> out;
  for (const auto& sentence : split_sentences(text)) out.push_back(tokenize(sentence));
  return out;
}

}  // namespace rgat
