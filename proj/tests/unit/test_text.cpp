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

#include <fstream>

#include "rgat/stemmer.hpp"
#include "rgat/text.hpp"
#include "test_util.hpp"

using namespace rgat;
using Strings = std::vector<std::string>;

TEST_SUITE("text") {
  TEST_CASE("sentence splitting") {
    CHECK(split_sentences("A b. C d.") == Strings{"A b.", "C d."});
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   ").empty());
    CHECK(split_sentences("e.g. test one. test two.") == Strings{"e.g. test one.", "test two."});
    CHECK(split_sentences("Is it? Yes! Done") == Strings{"Is it?", "Yes!", "Done"});
    CHECK(split_sentences("Value 3.5 rose. Next") == Strings{"Value 3.5 rose.", "Next"});
    CHECK(split_sentences("In the U.S. today. More.") == Strings{"In the U.S. today.", "More."});
    CHECK(split_sentences("One.\nTwo.") == Strings{"One.", "Two."});
  }

  TEST_CASE("tokenize examples") {
    CHECK(tokenize("Telomeres are specialized structures").tokens == Strings{"telomer", "special", "structur"});
    CHECK(tokenize("A 5 to 10%").tokens.empty());
    const std::string s = "Nitrosoureas exhibit high lipid solubility, crossing the blood-brain barrier.";
    CHECK(tokenize(s) == tokenize(s));
  }

  TEST_CASE("tokens respect length and stopword invariants") {
    const std::string text =
        "The patients WERE treated with 2 doses; it is an ex-vivo T-cell study of "
        "thyroid, colon & lung cancers in 1999 \xc3\xa9tude.";
    for (const auto& sentence : tokenize_document(text))
      for (const auto& tok : sentence.tokens) {
        CHECK(tok.size() >= 2);
        CHECK_FALSE(is_stopword(tok));
        for (char ch : tok) CHECK(((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9')));
      }
  }

  TEST_CASE("bundled stopword list") {
    const auto& words = stopword_list();
    CHECK(words.size() >= 170);
    CHECK(words.size() <= 185);
    CHECK(is_stopword("the"));
    CHECK(is_stopword("were"));
    CHECK_FALSE(is_stopword("thyroid"));
  }

  TEST_CASE("Porter stemmer matches the frozen reference oracle") {
    std::ifstream in(testing::data_dir() / "porter_oracle.tsv");
    REQUIRE(in);
    std::string line;
    int checked = 0, mismatched = 0;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      const std::string word = line.substr(0, tab), expected = line.substr(tab + 1);
      const std::string got = porter_stem(word);
      if (got != expected) {
        ++mismatched;
        MESSAGE(word << ": expected " << expected << ", got " << got);
      }
      ++checked;
    }
    CHECK(checked > 1000);
    CHECK(mismatched == 0);
  }
}
