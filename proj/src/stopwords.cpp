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

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rgat/text.hpp"

namespace rgat {

namespace detail {
const std::vector<std::string>& bundled_stopwords();
}

const std::vector<std::string>& stopword_list() { return detail::bundled_stopwords(); }

bool is_stopword(std::string_view word) {
  static const std::unordered_set<std::string_view> set = [] {
    std::unordered_set<std::string_view> s;
    for (const auto& w : stopword_list()) s.insert(w);
    return s;
  }();
  return set.contains(word);
}

}  // namespace rgat
