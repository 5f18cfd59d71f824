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

#include <iosfwd>
#include <string>
#include <vector>

#include "rgat/artifact.hpp"

namespace rgat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `rgat` invocation. `args` excludes the program name.
/// Subcommands: train, cv, eval, infer, report. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Class probabilities for raw text under a loaded artifact. Throws
/// rgat::UsageError for blank text.
Eigen::Vector4d infer_probabilities(const ModelArtifact& artifact, const std::string& text);

/// Rounds to 6 decimals with the largest-remainder method so the printed
/// values sum to exactly 1.000000.
std::array<std::string, kNumClasses> format_probabilities(const Eigen::Vector4d& probs);

}  // namespace rgat
