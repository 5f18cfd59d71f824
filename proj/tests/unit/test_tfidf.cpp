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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>

#include "rgat/error.hpp"
#include "rgat/rng.hpp"
#include "rgat/tfidf.hpp"
#include "test_util.hpp"

using namespace rgat;

namespace {

using Doc = std::vector<SentenceTokens>;

Doc doc(std::initializer_list<std::vector<std::string>> sentences) {
  Doc out;
  for (const auto& s : sentences) out.push_back(SentenceTokens{s});
  return out;
}

Doc from_json(const nlohmann::json& j) {
  Doc out;
  for (const auto& s : j) out.push_back(SentenceTokens{s.get<std::vector<std::string>>()});
  return out;
}

std::vector<Doc> docs_from_json(const nlohmann::json& j) {
  std::vector<Doc> out;
  for (const auto& d : j) out.push_back(from_json(d));
  return out;
}

double weight_of(const FeatureVector& v, const Vocabulary& vocab, const std::string& term) {
  const long idx = vocab.index_of(term);
  if (idx < 0) return 0.0;
  for (const auto& e : v.entries)
    if (e.index == static_cast<std::size_t>(idx)) return e.weight;
  return 0.0;
}

}  // namespace

TEST_SUITE("tfidf") {
  TEST_CASE("vocabulary counts documents and orders by df then term") {
    const std::vector<Doc> docs = {doc({{"x", "y"}}), doc({{"x", "z"}})};
    const Vocabulary v = fit_vocabulary(docs, NgramMode::kUnigram, 10);
    CHECK(v.terms() == std::vector<std::string>{"x", "y", "z"});
    CHECK(v.doc_freqs() == std::vector<std::size_t>{2, 1, 1});
    CHECK(v.n_docs() == 2);
    CHECK(v.index_of("x") == 0);
    CHECK(v.index_of("q") == -1);

    const Vocabulary capped = fit_vocabulary(docs, NgramMode::kUnigram, 1);
    CHECK(capped.terms() == std::vector<std::string>{"x"});

    const Vocabulary repeated = fit_vocabulary({doc({{"x", "x", "x"}}), doc({{"y"}})}, NgramMode::kUnigram);
    CHECK(repeated.doc_freq(static_cast<std::size_t>(repeated.index_of("x"))) == 1);
  }

  TEST_CASE("bigrams join adjacent tokens and never cross sentences") {
    const Vocabulary v = fit_vocabulary({doc({{"x", "y"}})}, NgramMode::kUnigramBigram);
    REQUIRE(v.index_of("x y") >= 0);
    CHECK(v.doc_freq(static_cast<std::size_t>(v.index_of("x y"))) == 1);
    const Vocabulary two = fit_vocabulary({doc({{"a", "b"}, {"c"}})}, NgramMode::kUnigramBigram);
    CHECK(two.index_of("b c") == -1);
    CHECK(two.size() == 4);
    CHECK(parse_ngram_mode("bigram") == NgramMode::kUnigramBigram);
    CHECK_THROWS_AS(parse_ngram_mode("trigram"), Error);
  }

  TEST_CASE("fitting with no surviving tokens is an error") {
    CHECK_THROWS_AS(fit_vocabulary({doc({{}})}, NgramMode::kUnigram), Error);
  }

  TEST_CASE("worked example weights") {
    const Vocabulary v = fit_vocabulary({doc({{"x", "y"}}), doc({{"x", "z"}})}, NgramMode::kUnigram);
    CHECK(v.idf(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(v.idf(1) == doctest::Approx(1.4054651081081644).epsilon(1e-15));
    const FeatureVector fv = tfidf_transform(doc({{"x", "y"}}), v);
    // Frozen from direct evaluation: (1, ln 1.5 + 1) / ||.||.
    CHECK(std::abs(weight_of(fv, v, "x") - 0.5797386715376657) <= 1e-12);
    CHECK(std::abs(weight_of(fv, v, "y") - 0.8148024746671689) <= 1e-12);
    CHECK(weight_of(fv, v, "z") == 0.0);
    CHECK(tfidf_transform(doc({{"q"}}), v).is_zero());
  }

  TEST_CASE("feature vectors are sorted and unit norm") {
    Rng rng(5);
    for (int c = 0; c < 50; ++c) {
      std::vector<Doc> docs;
      for (int d = 0; d < 4; ++d) {
        std::vector<std::string> s;
        for (int t = 0; t < 8; ++t) s.push_back("w" + std::to_string(rng.below(12)));
        docs.push_back(doc({s}));
      }
      const Vocabulary v = fit_vocabulary(docs, NgramMode::kUnigramBigram);
      for (const auto& d : docs) {
        const FeatureVector fv = tfidf_transform(d, v);
        double norm = 0.0;
        for (std::size_t i = 0; i < fv.entries.size(); ++i) {
          norm += fv.entries[i].weight * fv.entries[i].weight;
          if (i) CHECK(fv.entries[i - 1].index < fv.entries[i].index);
        }
        CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
        CHECK(fv.dimension == v.size());
      }
    }
  }

  TEST_CASE("vocabulary fitting is document-order insensitive") {
    Rng rng(11);
    for (int c = 0; c < 30; ++c) {
      std::vector<Doc> docs;
      for (int d = 0; d < 5; ++d) {
        std::vector<std::string> s;
        for (int t = 0; t < 6; ++t) s.push_back("t" + std::to_string(rng.below(9)));
        docs.push_back(doc({s}));
      }
      const Vocabulary a = fit_vocabulary(docs, NgramMode::kUnigramBigram, 7);
      rng.shuffle(std::span<Doc>(docs));
      const Vocabulary b = fit_vocabulary(docs, NgramMode::kUnigramBigram, 7);
      CHECK(a == b);
    }
  }

  TEST_CASE("matches the frozen scikit-learn oracle") {
    std::ifstream in(testing::data_dir() / "tfidf_oracle.json");
    REQUIRE(in);
    const auto cases = nlohmann::json::parse(in);
    REQUIRE(cases.size() >= 200);
    double worst = 0.0;
    for (const auto& c : cases) {
      const auto docs = docs_from_json(c.at("docs"));
      const Vocabulary v = fit_vocabulary(docs, parse_ngram_mode(c.at("ngram_mode").get<std::string>()), 100000);
      const auto queries = docs_from_json(c.at("queries"));
      const auto& expected = c.at("expected");
      for (std::size_t q = 0; q < queries.size(); ++q) {
        const FeatureVector fv = tfidf_transform(queries[q], v);
        const auto want = expected[q].get<std::map<std::string, double>>();
        CHECK(fv.entries.size() == want.size());
        for (const auto& [term, w] : want) worst = std::max(worst, std::abs(weight_of(fv, v, term) - w));
      }
    }
    CHECK(worst <= 1e-12);
  }
}
