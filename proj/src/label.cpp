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

#include "rgat/label.hpp"

#include <algorithm>
#include <cctype>

#include "rgat/error.hpp"

namespace rgat {

namespace {
constexpr std::array<std::string_view, kNumClasses> kNames = {"thyroid", "colon", "lung",
                                                              "generic"};
}

Label label_from_code(int c) {
  if (c < 0 || c >= static_cast<int>(kNumClasses))
    throw Error("label code out of range: " + std::to_string(c));
  return static_cast<Label>(c);
}

std::string_view label_name(Label label) {
  return kNames[static_cast<std::size_t>(code(label))];
}

Label parse_label(std::string_view name) {
  auto first = name.find_first_not_of(" \t\r\n");
  auto last = name.find_last_not_of(" \t\r\n");
  std::string lowered;
  if (first != std::string_view::npos) {
    for (char c : name.substr(first, last - first + 1))
      lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (lowered == kNames[i]) return static_cast<Label>(i);
  throw Error("unknown label '" + std::string(name) + "'");
}

}  // namespace rgat
