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
#include <string>
#include <string_view>

namespace rgat {

/// The four document classes. The numeric code is part of every file format
/// and of argmax tie-breaking (lowest code wins).
enum class Label : int { kThyroid = 0, kColon = 1, kLung = 2, kGeneric = 3 };

inline constexpr std::size_t kNumClasses = 4;

inline constexpr std::array<Label, kNumClasses> kAllLabels = {
    Label::kThyroid, Label::kColon, Label::kLung, Label::kGeneric};

constexpr int code(Label label) { return static_cast<int>(label); }

/// Throws rgat::Error for codes outside 0..3.
Label label_from_code(int code);

std::string_view label_name(Label label);

/// Case-insensitive; surrounding whitespace is ignored. Throws rgat::Error
/// ("unknown label '<value>'") for anything outside the label space.
Label parse_label(std::string_view name);

}  // namespace rgat
