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

#include <cstddef>
#include <filesystem>
#include <string>

#include "rgat/cross_validation.hpp"
#include "rgat/model.hpp"
#include "rgat/tfidf.hpp"

namespace rgat {

inline constexpr int kArtifactFormatVersion = 1;

struct TrainingSummary {
  int best_epoch = 0;
  int stopped_epoch = 0;
  double best_val_loss = 0.0;
  std::size_t n_train = 0;
  std::size_t n_val = 0;
};

/// Everything inference needs: vocabulary, graph threshold and parameters,
/// plus an echo of the training configuration.
struct ModelArtifact {
  int format_version = kArtifactFormatVersion;
  Vocabulary vocab;
  RgatModel model;
  PipelineConfig config;  // config.tau is the graph threshold used at inference
  TrainingSummary summary;
};

ModelArtifact make_artifact(const TrainedPipeline& trained, const PipelineConfig& config);

/// JSON text. Doubles are written in shortest round-trip decimal form, so
/// save -> load -> save is byte-identical and parameters survive bit-exactly.
std::string artifact_to_string(const ModelArtifact& artifact);
ModelArtifact artifact_from_string(const std::string& text);

void save_artifact(const ModelArtifact& artifact, const std::filesystem::path& path);
/// Throws rgat::Error on I/O, schema or shape problems and on a
/// format_version newer than kArtifactFormatVersion.
ModelArtifact load_artifact(const std::filesystem::path& path);

}  // namespace rgat
