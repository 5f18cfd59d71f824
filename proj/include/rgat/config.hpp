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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rgat/cross_validation.hpp"

namespace rgat {

/// Parses the flat `key = value` configuration format. Blank lines and lines
/// starting with '#' are ignored. Unknown keys and malformed values raise
/// rgat::UsageError naming the key.
///
/// Keys: learning_rate, epochs, early_stop_patience, class_weighting, l2,
/// beta1, beta2, adam_epsilon, threads, hidden_dim, heads, leaky_slope,
/// activation, dropout_keep, tau, max_features, ngram_mode, val_fraction,
/// smote_k, mnb_alpha, logreg_learning_rate, logreg_epochs, logreg_l2.
PipelineConfig parse_config(std::istream& in, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});

/// Writes every key in the same format; parse_config(format_config(c)) == c.
std::string format_config(const PipelineConfig& config);

}  // namespace rgat
