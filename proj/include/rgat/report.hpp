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
#include <vector>

#include "rgat/cross_validation.hpp"
#include "rgat/metrics.hpp"

namespace rgat {

/// One evaluated split, keyed by the text written to the `fold` column.
struct ScoredSplit {
  std::string fold;
  Metrics metrics;
  ConfusionMatrix confusion;
};

std::vector<ScoredSplit> scored_splits(const std::vector<FoldResult>& folds);

/// `fold,class,precision,recall,f1,support`: four class rows and a `macro`
/// row per split, then `mean` and `stdev` rows per class and for `macro`
/// when there is more than one split.
void write_metrics_csv(std::ostream& out, const std::vector<ScoredSplit>& splits);

/// `fold,accuracy,macro_f1,epochs_run,best_epoch,n_train,n_val,n_test`: one
/// row per fold and a final `aggregate` row holding the means.
void write_summary_csv(std::ostream& out, const std::vector<FoldResult>& folds);

/// `fold,epoch,train_loss,val_loss`.
void write_history_csv(std::ostream& out, const std::vector<FoldResult>& folds);
void write_history_csv(std::ostream& out, const TrainHistory& history, const std::string& fold);

/// `fold,true_class,thyroid,colon,lung,generic` with raw counts; an `all`
/// block with pooled counts follows when there is more than one split.
void write_confusion_csv(std::ostream& out, const std::vector<ScoredSplit>& splits);

/// Writes a text file, throwing rgat::Error on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Reads metrics.csv and confusion.csv from `dir` and renders the per-class
/// table (averaged over splits) and the pooled, row-normalized confusion
/// matrix in percent.
std::string render_report(const std::filesystem::path& dir);

}  // namespace rgat
