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

#include <set>
#include <sstream>

#include "rgat/corpus.hpp"
#include "rgat/error.hpp"
#include "surrogate.hpp"
#include "test_util.hpp"

using namespace rgat;

namespace {

Corpus read_jsonl(const std::string& text) {
  std::istringstream in(text);
  return read_corpus(in, CorpusFormat::kJsonl);
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Corpus counted_corpus(const std::array<int, 4>& counts) {
  std::vector<Document> docs;
  int id = 0;
  for (Label l : kAllLabels)
    for (int i = 0; i < counts[static_cast<std::size_t>(code(l))]; ++i, ++id)
      docs.push_back({"d" + std::to_string(id), "text " + std::to_string(id), l});
  return Corpus(std::move(docs));
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("label mapping is a fixed bijection") {
    for (Label l : kAllLabels) {
      CHECK(label_from_code(code(l)) == l);
      CHECK(parse_label(label_name(l)) == l);
    }
    CHECK(code(Label::kThyroid) == 0);
    CHECK(code(Label::kColon) == 1);
    CHECK(code(Label::kLung) == 2);
    CHECK(code(Label::kGeneric) == 3);
    CHECK(parse_label(" LuNg ") == Label::kLung);
    CHECK(error_of([] { parse_label("breast"); }).find("unknown label 'breast'") != std::string::npos);
    CHECK_THROWS_AS(label_from_code(4), Error);
  }

  TEST_CASE("load a one-line JSONL corpus") {
    const Corpus c = read_jsonl(R"({"id":"d1","text":"Telomerase is reactivated.","label":"thyroid"})" "\n");
    REQUIRE(c.size() == 1);
    CHECK(c[0].id == "d1");
    CHECK(c[0].text == "Telomerase is reactivated.");
    REQUIRE(c[0].label.has_value());
    CHECK(code(*c[0].label) == 0);
    CHECK(c.class_counts()[0] == 1);
  }

  TEST_CASE("labels parse case-insensitively") {
    const Corpus a = read_jsonl(R"({"id":"d1","text":"Telomerase is reactivated.","label":"thyroid"})");
    const Corpus b = read_jsonl(R"({"id":"d1","text":"Telomerase is reactivated.","label":"Thyroid"})");
    CHECK(a.documents() == b.documents());
  }

  TEST_CASE("load errors name the problem") {
    CHECK(error_of([] { read_jsonl(R"({"id":"d1","text":"x","label":"breast"})"); })
              .find("unknown label 'breast'") != std::string::npos);
    CHECK(error_of([] { read_jsonl("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n"); })
              .find("'a'") != std::string::npos);
    CHECK(error_of([] { read_jsonl("{\"id\":\"a\",\"text\":\"x\"}\n{not json\n"); })
              .find("line 2") != std::string::npos);
    CHECK(error_of([] { read_jsonl("{\"id\":\"a\"}\n"); }).find("line 1") != std::string::npos);
    CHECK(error_of([] { read_jsonl("{\"id\":\"a\",\"text\":\"   \"}\n"); }).find("line 1") != std::string::npos);
    CHECK(error_of([] { load_corpus("/nonexistent/corpus.jsonl"); })
              .find("/nonexistent/corpus.jsonl") != std::string::npos);
  }

  TEST_CASE("unlabeled documents are allowed but rejected for training") {
    const Corpus c = read_jsonl(R"({"id":"u","text":"Some text."})");
    CHECK_FALSE(c[0].label.has_value());
    CHECK(c.labeled_count() == 0);
    CHECK_THROWS_AS(c.require_labeled(), Error);
  }

  TEST_CASE("CSV with RFC 4180 quoting") {
    std::istringstream in(
        "id,text,label\r\n"
        "a,\"Quoted, with comma and \"\"quotes\"\"\nand a newline.\",lung\r\n"
        "b,Plain text.,\r\n");
    const Corpus c = read_corpus(in, CorpusFormat::kCsv);
    REQUIRE(c.size() == 2);
    CHECK(c[0].text == "Quoted, with comma and \"quotes\"\nand a newline.");
    CHECK(c[0].label == Label::kLung);
    CHECK_FALSE(c[1].label.has_value());
    std::istringstream bad("id,text,label\na,\"open,thyroid\n");
    CHECK(error_of([&] { read_corpus(bad, CorpusFormat::kCsv); }).find("line 2") != std::string::npos);
  }

  TEST_CASE("load -> serialize -> load is exact in both formats") {
    std::vector<Document> docs = {
        {"x1", "Caf\xc3\xa9 \"quoted\", comma.\nSecond line\twith tab.", Label::kColon},
        {"x2", "Unlabeled text.", std::nullopt},
        {"x3", "Generic, abstract; text!", Label::kGeneric}};
    const Corpus original(docs);
    for (auto format : {CorpusFormat::kJsonl, CorpusFormat::kCsv}) {
      std::ostringstream out;
      write_corpus(out, original, format);
      std::istringstream in(out.str());
      const Corpus back = read_corpus(in, format);
      CHECK(back.documents() == original.documents());
      std::ostringstream again;
      write_corpus(again, back, format);
      CHECK(again.str() == out.str());
    }
  }

  TEST_CASE("stratified 5-fold on 40/30/20/10 gives 8/6/4/2 per fold") {
    const Corpus c = counted_corpus({40, 30, 20, 10});
    const FoldPlan plan = stratified_kfold(c, 5, 42);
    for (int f = 0; f < 5; ++f) {
      std::array<int, 4> counts{};
      for (auto i : plan.fold_indices(c, f)) ++counts[static_cast<std::size_t>(code(*c[i].label))];
      CHECK(counts == std::array<int, 4>{8, 6, 4, 2});
    }
  }

  TEST_CASE("fold plans are deterministic and seed-dependent") {
    const Corpus c = counted_corpus({12, 9, 7, 5});
    CHECK(stratified_kfold(c, 5, 7).assignments == stratified_kfold(c, 5, 7).assignments);
    CHECK(stratified_kfold(c, 5, 7).assignments != stratified_kfold(c, 5, 8).assignments);
  }

  TEST_CASE("a class smaller than k is an error naming the class") {
    const Corpus c = counted_corpus({10, 10, 3, 10});
    CHECK(error_of([&] { stratified_kfold(c, 5, 1); }).find("lung") != std::string::npos);
    CHECK_THROWS_AS(stratified_kfold(c, 1, 1), Error);
  }

  TEST_CASE("folds partition the corpus and stay near-stratified") {
    for (int k = 2; k <= 6; ++k)
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Corpus c = counted_corpus({6 + static_cast<int>(seed) * 3, 7 + k, 11, 6 + k});
        const FoldPlan plan = stratified_kfold(c, k, seed);
        std::multiset<std::size_t> seen;
        for (int f = 0; f < k; ++f) {
          const auto idx = plan.fold_indices(c, f);
          seen.insert(idx.begin(), idx.end());
          const auto rest = plan.complement_indices(c, f);
          CHECK(idx.size() + rest.size() == c.size());
          for (Label l : kAllLabels) {
            const double n = static_cast<double>(c.class_counts()[static_cast<std::size_t>(code(l))]);
            int got = 0;
            for (auto i : idx) got += (c[i].label == l);
            CHECK(std::abs(got - n / k) <= 1.0);
          }
        }
        CHECK(seen.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(seen.count(i) == 1);
      }
  }

  TEST_CASE("surrogate corpus helper produces labeled, unique documents") {
    const Corpus c = testing::surrogate_corpus({3, 4, 5, 6}, 9);
    CHECK(c.size() == 18);
    CHECK(c.class_counts() == std::array<std::size_t, 4>{3, 4, 5, 6});
  }
}
