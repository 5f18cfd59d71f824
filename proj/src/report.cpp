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

#include "rgat/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "rgat/error.hpp"

namespace rgat {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void metrics_row(std::ostream& out, const std::string& fold, const std::string& cls, double p,
                 double r, double f, std::int64_t support) {
  out << fold << ',' << cls << ',' << fixed6(p) << ',' << fixed6(r) << ',' << fixed6(f) << ','
      << support << '\n';
}

double macro_precision(const Metrics& m) {
  double s = 0.0;
  for (const auto& c : m.per_class) s += c.precision;
  return s / static_cast<double>(kNumClasses);
}

double macro_recall(const Metrics& m) {
  double s = 0.0;
  for (const auto& c : m.per_class) s += c.recall;
  return s / static_cast<double>(kNumClasses);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::filesystem::path& file) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(file.string() + ": invalid number '" + s + "'");
  return v;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != expected_header)
    throw Error(path.string() + ": expected header '" + expected_header + "'");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv(line));
  }
  return rows;
}

bool is_summary_fold(const std::string& fold) {
  return fold == "mean" || fold == "stdev" || fold == "all" || fold == "aggregate";
}

}  // namespace

std::vector<ScoredSplit> scored_splits(const std::vector<FoldResult>& folds) {
  std::vector<ScoredSplit> out;
  for (const auto& f : folds) out.push_back({std::to_string(f.fold), f.metrics, f.confusion});
  return out;
}

void write_metrics_csv(std::ostream& out, const std::vector<ScoredSplit>& splits) {
  out << "fold,class,precision,recall,f1,support\n";
  for (const auto& s : splits) {
    for (Label l : kAllLabels) {
      const auto& c = s.metrics.per_class[static_cast<std::size_t>(code(l))];
      metrics_row(out, s.fold, std::string(label_name(l)), c.precision, c.recall, c.f1, c.support);
    }
    metrics_row(out, s.fold, "macro", macro_precision(s.metrics), macro_recall(s.metrics),
                s.metrics.macro_f1, s.confusion.total());
  }
  if (splits.size() < 2) return;

  auto row_pair = [&](const std::string& cls, auto getter) {
    std::vector<double> p, r, f;
    std::int64_t support = 0;
    for (const auto& s : splits) {
      auto [pp, rr, ff, ss] = getter(s);
      p.push_back(pp);
      r.push_back(rr);
      f.push_back(ff);
      support += ss;
    }
    const Spread sp = spread(p), sr = spread(r), sf = spread(f);
    metrics_row(out, "mean", cls, sp.mean, sr.mean, sf.mean, support);
    metrics_row(out, "stdev", cls, sp.stdev, sr.stdev, sf.stdev, support);
  };
  for (Label l : kAllLabels) {
    const auto i = static_cast<std::size_t>(code(l));
    row_pair(std::string(label_name(l)), [i](const ScoredSplit& s) {
      const auto& c = s.metrics.per_class[i];
      return std::tuple{c.precision, c.recall, c.f1, c.support};
    });
  }
  row_pair("macro", [](const ScoredSplit& s) {
    return std::tuple{macro_precision(s.metrics), macro_recall(s.metrics), s.metrics.macro_f1,
                      s.confusion.total()};
  });
}

void write_summary_csv(std::ostream& out, const std::vector<FoldResult>& folds) {
  out << "fold,accuracy,macro_f1,epochs_run,best_epoch,n_train,n_val,n_test\n";
  const CvSummary s = summarize(folds);
  for (const auto& f : folds)
    out << f.fold << ',' << fixed6(f.metrics.accuracy) << ',' << fixed6(f.metrics.macro_f1) << ','
        << f.history.stopped_epoch << ',' << f.history.best_epoch << ',' << f.n_train << ','
        << f.n_val << ',' << f.n_test << '\n';
  out << "aggregate," << fixed6(s.accuracy.mean) << ',' << fixed6(s.macro_f1.mean) << ",,,,,\n";
}

void write_history_csv(std::ostream& out, const TrainHistory& history, const std::string& fold) {
  for (std::size_t e = 0; e < history.epochs.size(); ++e)
    out << fold << ',' << (e + 1) << ',' << shortest(history.epochs[e].train_loss) << ','
        << shortest(history.epochs[e].val_loss) << '\n';
}

void write_history_csv(std::ostream& out, const std::vector<FoldResult>& folds) {
  out << "fold,epoch,train_loss,val_loss\n";
  for (const auto& f : folds) write_history_csv(out, f.history, std::to_string(f.fold));
}

void write_confusion_csv(std::ostream& out, const std::vector<ScoredSplit>& splits) {
  out << "fold,true_class,thyroid,colon,lung,generic\n";
  auto block = [&](const std::string& fold, const ConfusionMatrix& cm) {
    for (Label l : kAllLabels) {
      out << fold << ',' << label_name(l);
      for (int p = 0; p < 4; ++p) out << ',' << cm.counts(code(l), p);
      out << '\n';
    }
  };
  ConfusionMatrix pooled;
  for (const auto& s : splits) {
    block(s.fold, s.confusion);
    pooled += s.confusion;
  }
  if (splits.size() > 1) block("all", pooled);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string render_report(const std::filesystem::path& dir) {
  const auto metrics_path = dir / "metrics.csv";
  const auto confusion_path = dir / "confusion.csv";
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: '" + dir.string() + "'");
  for (const auto& p : {metrics_path, confusion_path})
    if (!std::filesystem::exists(p)) throw Error("missing metrics file '" + p.string() + "'");

  // Per-class averages over the individual splits.
  struct Acc {
    double p = 0, r = 0, f = 0;
    std::int64_t support = 0;
    int n = 0;
  };
  std::map<std::string, Acc> acc;
  for (const auto& row : read_csv(metrics_path, "fold,class,precision,recall,f1,support")) {
    if (row.size() != 6) throw Error(metrics_path.string() + ": expected 6 columns");
    if (is_summary_fold(row[0])) continue;
    auto& a = acc[row[1]];
    a.p += to_double(row[2], metrics_path);
    a.r += to_double(row[3], metrics_path);
    a.f += to_double(row[4], metrics_path);
    a.support += static_cast<std::int64_t>(to_double(row[5], metrics_path));
    ++a.n;
  }

  ConfusionMatrix pooled;
  bool any_confusion = false;
  for (const auto& row : read_csv(confusion_path, "fold,true_class,thyroid,colon,lung,generic")) {
    if (row.size() != 6) throw Error(confusion_path.string() + ": expected 6 columns");
    if (is_summary_fold(row[0])) continue;
    const Label truth = parse_label(row[1]);
    for (int p = 0; p < 4; ++p)
      pooled.counts(code(truth), p) +=
          static_cast<std::int64_t>(to_double(row[static_cast<std::size_t>(p) + 2], confusion_path));
    any_confusion = true;
  }
  if (!any_confusion) throw Error(confusion_path.string() + ": no confusion rows");

  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %9s %9s %9s %9s\n", "class", "precision", "recall", "f1",
                "support");
  out << buf;
  for (Label l : kAllLabels) {
    const std::string name(label_name(l));
    auto it = acc.find(name);
    if (it == acc.end()) throw Error(metrics_path.string() + ": no rows for class '" + name + "'");
    const Acc& a = it->second;
    std::snprintf(buf, sizeof buf, "%-10s %9.4f %9.4f %9.4f %9lld\n", name.c_str(), a.p / a.n,
                  a.r / a.n, a.f / a.n, static_cast<long long>(a.support));
    out << buf;
  }
  if (auto it = acc.find("macro"); it != acc.end()) {
    const Acc& a = it->second;
    std::snprintf(buf, sizeof buf, "%-10s %9.4f %9.4f %9.4f %9lld\n", "macro", a.p / a.n,
                  a.r / a.n, a.f / a.n, static_cast<long long>(a.support));
    out << buf;
  }

  out << "\nconfusion matrix (% of true class; rows true, columns predicted)\n";
  std::snprintf(buf, sizeof buf, "%-10s %8s %8s %8s %8s\n", "", "thyroid", "colon", "lung",
                "generic");
  out << buf;
  const Eigen::Matrix4d norm = pooled.row_normalized() * 100.0;
  for (Label l : kAllLabels) {
    const int r = code(l);
    std::snprintf(buf, sizeof buf, "%-10s %8.1f %8.1f %8.1f %8.1f\n",
                  std::string(label_name(l)).c_str(), norm(r, 0), norm(r, 1), norm(r, 2),
                  norm(r, 3));
    out << buf;
  }
  return out.str();
}

}  // namespace rgat
