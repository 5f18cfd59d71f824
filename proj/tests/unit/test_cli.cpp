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

#include <sstream>

#include "rgat/cli.hpp"
#include "rgat/config.hpp"
#include "rgat/error.hpp"
#include "rgat/report.hpp"
#include "surrogate.hpp"
#include "test_util.hpp"

using namespace rgat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kQuickConfig =
    "# small settings for tests\n"
    "epochs = 4\n"
    "early_stop_patience = 4\n"
    "hidden_dim = 8\n"
    "heads = 2\n"
    "learning_rate = 0.01\n";

struct Fixture {
  fs::path dir = testing::scratch_dir("cli");
  fs::path corpus = dir / "corpus.jsonl";
  fs::path config = dir / "quick.cfg";
  Fixture() {
    save_corpus(corpus, testing::surrogate_corpus({8, 8, 8, 8}, 21), CorpusFormat::kJsonl);
    write_file(config, kQuickConfig);
  }
};

PipelineConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config parsing is strict") {
    const PipelineConfig c = parse("tau = 0.5\n  # comment\n\nngram_mode = unigram+bigram\nactivation=identity\n");
    CHECK(c.tau == 0.5);
    CHECK(c.ngram_mode == NgramMode::kUnigramBigram);
    CHECK(c.model.activation == Activation::kIdentity);
    CHECK(c.train.learning_rate == 5e-3);
    try {
      parse("learning_rte = 0.1\n");
      FAIL("expected an error");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("learning_rte") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("epochs = ten\n"), UsageError);
    CHECK_THROWS_AS(parse("epochs = 0\n"), UsageError);
    CHECK_THROWS_AS(parse("tau = 1.5\n"), UsageError);
    CHECK_THROWS_AS(parse("hidden_dim = 10\nheads = 4\n"), UsageError);
    CHECK_THROWS_AS(parse("class_weighting = sometimes\n"), UsageError);
    CHECK_THROWS_AS(parse("no equals sign\n"), UsageError);
  }

  TEST_CASE("format_config round-trips") {
    PipelineConfig c = parse("learning_rate = 0.0123\ntau = 0.3\nmax_features = 77\nclass_weighting = none\n");
    const std::string text = format_config(c);
    const PipelineConfig back = parse(text);
    CHECK(format_config(back) == text);
    CHECK(back.train.learning_rate == 0.0123);
    CHECK(back.max_features == 77);
  }

  TEST_CASE("probability formatting sums to exactly one") {
    const Eigen::Vector4d p(0.1234564, 0.1234564, 0.1234564, 1.0 - 3 * 0.1234564);
    const auto s = format_probabilities(p);
    long total = 0;
    for (const auto& v : s) {
      CHECK(v.size() == 8);
      total += std::lround(std::stod(v) * 1e6);
    }
    CHECK(total == 1000000);
    const auto one = format_probabilities(Eigen::Vector4d(1.0, 0.0, 0.0, 0.0));
    CHECK(one[0] == "1.000000");
    CHECK(one[3] == "0.000000");
  }

  TEST_CASE("train writes a loadable artifact and history") {
    Fixture fx;
    const fs::path model = fx.dir / "model.json";
    const Run r = cli({"train", "--corpus", fx.corpus.string(), "--config", fx.config.string(),
                       "--out", model.string()});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const ModelArtifact a = load_artifact(model);
    CHECK(a.format_version == 1);
    CHECK(a.vocab.size() > 0);
    CHECK(a.config.train.epochs == 4);
    CHECK(a.config.train.seed == 42);
    const std::string history = testing::read_file(model.string() + ".history.csv");
    CHECK(history.rfind("fold,epoch,train_loss,val_loss\n", 0) == 0);

    SUBCASE("save -> load -> save is byte-identical and bit-exact") {
      const std::string first = testing::read_file(model);
      const fs::path again = fx.dir / "again.json";
      save_artifact(a, again);
      CHECK(testing::read_file(again) == first);
      const ModelArtifact b = load_artifact(again);
      const auto pa = a.model.parameters(), pb = b.model.parameters();
      for (std::size_t i = 0; i < pa.size(); ++i) CHECK(*pa[i] == *pb[i]);
      CHECK(a.vocab == b.vocab);
    }
    SUBCASE("newer format versions are rejected") {
      std::string text = testing::read_file(model);
      const auto pos = text.find("\"format_version\": 1");
      REQUIRE(pos != std::string::npos);
      text.replace(pos, 19, "\"format_version\": 2");
      try {
        artifact_from_string(text);
        FAIL("expected an error");
      } catch (const Error& e) {
        CHECK(std::string(e.what()).find("format_version 2") != std::string::npos);
      }
    }
    SUBCASE("infer prints a label and four probabilities") {
      const Run i1 = cli({"infer", "--model", model.string(), "--text",
                          "Papillary thyroid nodules were treated with radioiodine."});
      REQUIRE_MESSAGE(i1.code == 0, i1.err);
      std::istringstream lines(i1.out);
      std::string predicted, name, value;
      lines >> predicted;
      CHECK_NOTHROW(parse_label(predicted));
      long total = 0;
      for (Label l : kAllLabels) {
        lines >> name >> value;
        CHECK(name == label_name(l));
        CHECK(value.size() == 8);
        total += std::lround(std::stod(value) * 1e6);
      }
      CHECK(total == 1000000);
      CHECK(cli({"infer", "--model", model.string(), "--text",
                 "Papillary thyroid nodules were treated with radioiodine."}).out == i1.out);
      const fs::path text_file = fx.dir / "abstract.txt";
      write_file(text_file, "Papillary thyroid nodules were treated with radioiodine.");
      CHECK(cli({"infer", "--model", model.string(), "--file", text_file.string()}).out == i1.out);
      CHECK(cli({"infer", "--model", model.string(), "--text", "   "}).code == 2);
      CHECK(cli({"infer", "--model", model.string()}).code == 2);
    }
    SUBCASE("eval scores an artifact and feeds report") {
      const fs::path out = fx.dir / "eval";
      const Run e = cli({"eval", "--model", model.string(), "--corpus", fx.corpus.string(), "--out", out.string()});
      REQUIRE_MESSAGE(e.code == 0, e.err);
      CHECK(cli({"report", out.string()}).code == 0);
    }
  }

  TEST_CASE("train failure modes map to exit codes") {
    Fixture fx;
    const Run missing = cli({"train", "--corpus", (fx.dir / "nope.jsonl").string(), "--out",
                             (fx.dir / "m.json").string()});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("nope.jsonl") != std::string::npos);
    CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
    const fs::path bad = fx.dir / "bad.cfg";
    write_file(bad, "epochs = 3\nlearnig_rate = 0.1\n");
    const Run unknown = cli({"train", "--corpus", fx.corpus.string(), "--config", bad.string(),
                             "--out", (fx.dir / "m.json").string()});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("learnig_rate") != std::string::npos);
    CHECK(cli({"train", "--corpus", fx.corpus.string()}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"cv", "--corpus", fx.corpus.string(), "--out", (fx.dir / "x").string(), "--k", "1"}).code == 2);
    CHECK(cli({"infer", "--model", (fx.dir / "missing.json").string(), "--text", "Some text."}).code == 1);
  }

  TEST_CASE("cv writes fold CSVs and is deterministic") {
    Fixture fx;
    const fs::path a = fx.dir / "cv_a", b = fx.dir / "cv_b";
    const std::vector<std::string> common = {"--corpus", fx.corpus.string(), "--config",
                                             fx.config.string(), "--k", "3", "--seed", "9"};
    auto args = [&](const fs::path& out) {
      std::vector<std::string> v = {"cv"};
      v.insert(v.end(), common.begin(), common.end());
      v.push_back("--out");
      v.push_back(out.string());
      return v;
    };
    REQUIRE(cli(args(a)).code == 0);
    REQUIRE(cli(args(b)).code == 0);
    for (const char* f : {"metrics.csv", "summary.csv", "history.csv", "confusion.csv"})
      CHECK(testing::read_file(a / f) == testing::read_file(b / f));
    std::istringstream summary(testing::read_file(a / "summary.csv"));
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(summary, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "fold,accuracy,macro_f1,epochs_run,best_epoch,n_train,n_val,n_test");
    CHECK(rows[4].rfind("aggregate,", 0) == 0);
    CHECK(testing::read_file(a / "metrics.csv").rfind("fold,class,precision,recall,f1,support\n", 0) == 0);

    const Run rep = cli({"report", a.string()});
    REQUIRE(rep.code == 0);
    int class_rows = 0;
    std::istringstream text(rep.out);
    bool in_table = true;
    while (std::getline(text, line)) {
      if (line.empty()) in_table = false;
      if (!in_table) continue;
      for (Label l : kAllLabels)
        if (line.rfind(std::string(label_name(l)) + " ", 0) == 0) ++class_rows;
    }
    CHECK(class_rows == 4);
  }

  TEST_CASE("report renders perfect metrics and rejects missing files") {
    const fs::path dir = testing::scratch_dir("report");
    std::vector<Label> truth = {Label::kThyroid, Label::kColon, Label::kLung, Label::kGeneric};
    const ConfusionMatrix cm = confusion_from(truth, truth);
    const std::vector<ScoredSplit> splits = {{"0", compute_metrics(cm), cm}, {"1", compute_metrics(cm), cm}};
    std::ostringstream m, c;
    write_metrics_csv(m, splits);
    write_confusion_csv(c, splits);
    write_file(dir / "metrics.csv", m.str());
    write_file(dir / "confusion.csv", c.str());
    const std::string text = render_report(dir);
    const auto grid = text.substr(text.find("confusion matrix"));
    for (Label l : kAllLabels) {
      const auto at = grid.find("\n" + std::string(label_name(l)) + " ");
      REQUIRE(at != std::string::npos);
      const std::string row = grid.substr(at + 1, grid.find('\n', at + 1) - at - 1);
      std::istringstream cells(row);
      std::string name;
      cells >> name;
      for (int col = 0; col < 4; ++col) {
        std::string v;
        cells >> v;
        CHECK(v == (col == code(l) ? "100.0" : "0.0"));
      }
    }
    const fs::path empty = testing::scratch_dir("report_empty");
    CHECK(cli({"report", empty.string()}).code == 1);
    CHECK(cli({"report", (empty / "missing").string()}).code == 1);
  }
}
