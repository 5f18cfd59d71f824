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

#include "surrogate.hpp"

#include <vector>

#include "rgat/rng.hpp"

namespace rgat::testing {

namespace {

const std::array<std::vector<std::string>, 4> kKeywords = {{
    {"thyroid", "papillary", "follicular", "thyroidectomy", "thyroglobulin", "iodine",
     "goiter", "parathyroid", "medullary", "calcitonin", "nodule", "radioiodine"},
    {"colon", "colorectal", "polyp", "adenoma", "colonoscopy", "rectal", "bowel",
     "mucosa", "sigmoid", "colectomy", "intestinal", "microsatellite"},
    {"lung", "pulmonary", "bronchial", "smoker", "nodular", "thoracic", "pleural",
     "adenocarcinoma", "bronchoscopy", "airway", "alveolar", "lobectomy"},
    {"tumor", "oncology", "metastasis", "chemotherapy", "biopsy", "malignancy", "survival",
     "carcinogen", "apoptosis", "mutation", "proliferation", "immune"},
}};

const std::vector<std::string> kFiller = {
    "patients", "study", "results", "analysis", "clinical", "significant", "increased",
    "observed", "treatment", "expression", "levels", "cells", "group", "cohort", "risk",
    "associated", "compared", "factors", "outcome", "response", "method", "data", "model",
    "evaluated", "reported", "measured", "trial", "sample", "protein", "gene"};

const std::string& pick(const std::vector<std::string>& pool, Rng& rng) {
  return pool[rng.below(pool.size())];
}

}  // namespace

std::string surrogate_abstract(Label label, std::uint64_t seed, double keyword_share) {
  Rng rng(seed);
  const auto own = static_cast<std::size_t>(code(label));
  const int sentences = 3 + static_cast<int>(rng.below(5));
  std::string text;
  for (int s = 0; s < sentences; ++s) {
    const int words = 6 + static_cast<int>(rng.below(7));
    std::string sentence;
    for (int w = 0; w < words; ++w) {
      const double u = rng.uniform();
      std::string word;
      if (u < keyword_share) word = pick(kKeywords[own], rng);
      else if (u < keyword_share + 0.05) word = pick(kKeywords[rng.below(4)], rng);
      else word = pick(kFiller, rng);
      if (w == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      sentence += (w == 0 ? "" : " ") + word;
    }
    text += (s == 0 ? "" : " ") + sentence + ".";
  }
  return text;
}

Corpus surrogate_corpus(const std::array<int, 4>& per_class, std::uint64_t seed,
                        double keyword_share) {
  std::vector<Document> docs;
  int id = 0;
  for (Label label : kAllLabels)
    for (int i = 0; i < per_class[static_cast<std::size_t>(code(label))]; ++i, ++id)
      docs.push_back({"doc" + std::to_string(id),
                      surrogate_abstract(label, derive_seed(seed, "surrogate", static_cast<std::uint64_t>(id)),
                                         keyword_share),
                      label});
  return Corpus(std::move(docs));
}

}  // namespace rgat::testing
