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

#include "rgat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "rgat/config.hpp"
#include "rgat/error.hpp"
#include "rgat/kernels.hpp"
#include "rgat/report.hpp"
#include "rgat/text.hpp"

namespace rgat {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::uint64_t seed = 42;
  std::string config;
  std::string out;
  std::string corpus;
  std::string model;
  std::string text;
  std::string file;
  std::string history;
  std::string dir;
  int k = 5;
  bool baselines = false;
  bool verbose = false;
};

PipelineConfig resolve_config(const Options& o) {
  PipelineConfig config = o.config.empty() ? PipelineConfig{} : load_config(o.config);
  config.train.seed = o.seed;
  return config;
}

ProgressFn progress_to(std::ostream& err, bool verbose) {
  if (!verbose) return {};
  return [&err](const std::string& m) { err << m << '\n'; };
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error("cannot create output directory '" + dir.string() + "'");
}

template <typename Writer>
std::string render(Writer&& writer) {
  std::ostringstream s;
  writer(s);
  return s.str();
}

int cmd_train(const Options& o, std::ostream& out, std::ostream& err) {
  const PipelineConfig config = resolve_config(o);
  const Corpus corpus = load_corpus(o.corpus);
  const TrainedPipeline trained = train_pipeline(corpus, config, progress_to(err, o.verbose));
  const ModelArtifact artifact = make_artifact(trained, config);
  save_artifact(artifact, o.out);
  const std::string history_path = o.history.empty() ? o.out + ".history.csv" : o.history;
  write_file(history_path, render([&](std::ostream& s) {
               s << "fold,epoch,train_loss,val_loss\n";
               write_history_csv(s, trained.result.history, "all");
             }));
  out << "wrote " << o.out << " (best epoch " << artifact.summary.best_epoch << " of "
      << artifact.summary.stopped_epoch << ", " << trained.vocab.size() << " terms)\n";
  return kExitOk;
}

int cmd_cv(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.k < 2) throw UsageError("--k must be at least 2");
  const PipelineConfig config = resolve_config(o);
  const Corpus corpus = load_corpus(o.corpus);
  const fs::path dir(o.out);
  ensure_dir(dir);
  const CvResult cv = cross_validate(corpus, config, o.k, o.seed, progress_to(err, o.verbose));
  const auto splits = scored_splits(cv.folds);
  write_file(dir / "metrics.csv", render([&](std::ostream& s) { write_metrics_csv(s, splits); }));
  write_file(dir / "summary.csv", render([&](std::ostream& s) { write_summary_csv(s, cv.folds); }));
  write_file(dir / "history.csv", render([&](std::ostream& s) { write_history_csv(s, cv.folds); }));
  write_file(dir / "confusion.csv", render([&](std::ostream& s) { write_confusion_csv(s, splits); }));

  char buf[128];
  std::snprintf(buf, sizeof buf, "r-gat macro-F1 %.4f +/- %.4f, accuracy %.4f\n",
                cv.summary.macro_f1.mean, cv.summary.macro_f1.stdev, cv.summary.accuracy.mean);
  out << buf;

  if (o.baselines) {
    const auto b = cross_validate_baselines(corpus, config, o.k, o.seed, progress_to(err, o.verbose));
    const std::pair<std::string, const std::vector<FoldResult>*> models[] = {
        {"naive_bayes", &b.naive_bayes}, {"logistic_regression", &b.logistic_regression}};
    for (const auto& [name, folds] : models) {
      const auto s = scored_splits(*folds);
      write_file(dir / (name + "_metrics.csv"), render([&](std::ostream& o2) { write_metrics_csv(o2, s); }));
      write_file(dir / (name + "_summary.csv"), render([&](std::ostream& o2) { write_summary_csv(o2, *folds); }));
      const CvSummary sum = summarize(*folds);
      std::snprintf(buf, sizeof buf, "%s macro-F1 %.4f +/- %.4f\n", name.c_str(),
                    sum.macro_f1.mean, sum.macro_f1.stdev);
      out << buf;
    }
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const ModelArtifact artifact = load_artifact(o.model);
  const Corpus corpus = load_corpus(o.corpus);
  corpus.require_labeled();
  std::vector<DocumentGraph> graphs;
  graphs.reserve(corpus.size());
  for (const auto& doc : corpus.documents())
    graphs.push_back(build_document_graph(doc, artifact.vocab, artifact.config.tau));
  const Evaluation ev = evaluate(artifact.model, graphs, artifact.config.train.threads);
  const std::vector<ScoredSplit> splits = {{"eval", ev.metrics, ev.confusion}};
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    ensure_dir(dir);
    write_file(dir / "metrics.csv", render([&](std::ostream& s) { write_metrics_csv(s, splits); }));
    write_file(dir / "confusion.csv", render([&](std::ostream& s) { write_confusion_csv(s, splits); }));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "documents %zu, accuracy %.4f, macro-F1 %.4f\n", corpus.size(),
                ev.metrics.accuracy, ev.metrics.macro_f1);
  out << buf;
  return kExitOk;
}

int cmd_infer(const Options& o, std::ostream& out) {
  if (!o.text.empty() && !o.file.empty()) throw UsageError("give either --text or --file, not both");
  if (o.text.empty() && o.file.empty()) throw UsageError("infer needs --text or --file");
  const std::string text = o.file.empty() ? o.text : read_text_file(o.file);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("input text is empty");
  const ModelArtifact artifact = load_artifact(o.model);
  const Eigen::Vector4d probs = infer_probabilities(artifact, text);
  const auto printed = format_probabilities(probs);
  out << label_name(label_from_code(static_cast<int>(argmax(probs)))) << '\n';
  for (Label l : kAllLabels)
    out << label_name(l) << ' ' << printed[static_cast<std::size_t>(code(l))] << '\n';
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  out << render_report(o.dir);
  return kExitOk;
}

}  // namespace

Eigen::Vector4d infer_probabilities(const ModelArtifact& artifact, const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("input text is empty");
  const auto sentences = tokenize_document(text);
  if (sentences.empty()) throw UsageError("input text has no sentences");
  const DocumentGraph graph =
      build_document_graph(sentences, artifact.vocab, artifact.config.tau, std::nullopt);
  return rgat_forward(artifact.model, graph);
}

std::array<std::string, kNumClasses> format_probabilities(const Eigen::Vector4d& probs) {
  constexpr std::int64_t kScale = 1000000;
  std::array<std::int64_t, kNumClasses> units{};
  std::array<double, kNumClasses> remainder{};
  std::int64_t total = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const double scaled = probs(static_cast<Eigen::Index>(c)) * static_cast<double>(kScale);
    units[c] = static_cast<std::int64_t>(std::floor(scaled));
    remainder[c] = scaled - static_cast<double>(units[c]);
    total += units[c];
  }
  std::array<std::size_t, kNumClasses> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; total < kScale && i < kNumClasses; ++i, ++total) ++units[order[i]];
  std::array<std::string, kNumClasses> out;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%06lld", static_cast<long long>(units[c] / kScale),
                  static_cast<long long>(units[c] % kScale));
    out[c] = buf;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Residual graph attention classifier for cancer abstracts", "rgat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Base seed for every random choice")->capture_default_str();
    sub->add_option("--config", o.config, "Flat key = value configuration file");
    sub->add_flag("--verbose", o.verbose, "Progress messages on standard error");
  };

  auto* train = app.add_subcommand("train", "Train on a labeled corpus and write a model artifact");
  common(train);
  train->add_option("--corpus", o.corpus, "Corpus file (.jsonl or .csv)")->required();
  train->add_option("--out", o.out, "Artifact path")->required();
  train->add_option("--history", o.history, "History CSV path (default <out>.history.csv)");

  auto* cv = app.add_subcommand("cv", "Stratified k-fold cross-validation");
  common(cv);
  cv->add_option("--corpus", o.corpus, "Corpus file (.jsonl or .csv)")->required();
  cv->add_option("--out", o.out, "Output directory for CSV reports")->required();
  cv->add_option("--k", o.k, "Number of folds")->capture_default_str();
  cv->add_flag("--baselines", o.baselines, "Also evaluate Naive Bayes and logistic regression");

  auto* ev = app.add_subcommand("eval", "Score a model artifact on a labeled corpus");
  common(ev);
  ev->add_option("--model", o.model, "Model artifact")->required();
  ev->add_option("--corpus", o.corpus, "Corpus file (.jsonl or .csv)")->required();
  ev->add_option("--out", o.out, "Optional output directory for CSV reports");

  auto* inf = app.add_subcommand("infer", "Classify one abstract");
  common(inf);
  inf->add_option("--model", o.model, "Model artifact")->required();
  inf->add_option("--text", o.text, "Abstract text");
  inf->add_option("--file", o.file, "File holding the abstract ('-' for standard input)");

  auto* rep = app.add_subcommand("report", "Render metrics CSVs as text tables");
  rep->add_option("dir", o.dir, "Directory holding metrics.csv and confusion.csv")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(o, out, err);
    if (cv->parsed()) return cmd_cv(o, out, err);
    if (ev->parsed()) return cmd_eval(o, out);
    if (inf->parsed()) return cmd_infer(o, out);
    if (rep->parsed()) return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "rgat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rgat: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rgat
