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

#include "rgat/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rgat/error.hpp"
#include "rgat/rng.hpp"

namespace rgat {

namespace {

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

Corpus read_jsonl(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(at_line(line_no, std::string("malformed record: ") + e.what()));
    }
    if (!record.is_object()) throw Error(at_line(line_no, "malformed record: not an object"));
    auto get_string = [&](const char* key, bool required) -> std::optional<std::string> {
      auto it = record.find(key);
      if (it == record.end() || it->is_null()) {
        if (required) throw Error(at_line(line_no, std::string("malformed record: missing field '") + key + "'"));
        return std::nullopt;
      }
      if (!it->is_string()) throw Error(at_line(line_no, std::string("malformed record: field '") + key + "' is not a string"));
      return it->get<std::string>();
    };
    Document doc;
    doc.id = *get_string("id", true);
    doc.text = *get_string("text", true);
    if (is_blank(doc.text)) throw Error(at_line(line_no, "malformed record: empty text"));
    if (auto label = get_string("label", false)) {
      try {
        doc.label = parse_label(*label);
      } catch (const Error& e) {
        throw Error(at_line(line_no, e.what()));
      }
    }
    docs.push_back(std::move(doc));
  }
  return Corpus(std::move(docs));
}

// RFC-4180 reader. Returns false at end of input; `start_line` receives the
// line the record begins on.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line_no, std::size_t& start_line) {
  fields.clear();
  int c = in.peek();
  if (c == std::char_traits<char>::eof()) return false;
  ++line_no;
  start_line = line_no;
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  while (true) {
    c = in.get();
    if (c == std::char_traits<char>::eof()) {
      if (quoted) throw Error(at_line(start_line, "malformed record: unterminated quoted field"));
      fields.push_back(std::move(field));
      return true;
    }
    char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line_no;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"') {
      if (!field.empty() || field_was_quoted)
        throw Error(at_line(start_line, "malformed record: stray quote"));
      quoted = true;
      field_was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (ch == '\r' && in.peek() == '\n') {
      // handled on '\n'
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else {
      if (field_was_quoted) throw Error(at_line(start_line, "malformed record: text after closing quote"));
      field.push_back(ch);
    }
  }
}

Corpus read_csv(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t line_no = 0, start = 0;
  if (!read_csv_record(in, fields, line_no, start))
    throw Error("line 1: malformed record: missing header");
  if (!fields.empty() && fields[0].rfind("\xEF\xBB\xBF", 0) == 0) fields[0].erase(0, 3);
  int id_col = -1, text_col = -1, label_col = -1;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == "id") id_col = static_cast<int>(i);
    else if (fields[i] == "text") text_col = static_cast<int>(i);
    else if (fields[i] == "label") label_col = static_cast<int>(i);
  }
  if (id_col < 0 || text_col < 0)
    throw Error("line 1: malformed record: header must contain id,text[,label]");
  const std::size_t width = fields.size();

  std::vector<Document> docs;
  while (read_csv_record(in, fields, line_no, start)) {
    if (fields.size() == 1 && is_blank(fields[0])) continue;
    if (fields.size() != width)
      throw Error(at_line(start, "malformed record: expected " + std::to_string(width) +
                                     " fields, got " + std::to_string(fields.size())));
    Document doc;
    doc.id = fields[static_cast<std::size_t>(id_col)];
    doc.text = fields[static_cast<std::size_t>(text_col)];
    if (doc.id.empty()) throw Error(at_line(start, "malformed record: empty id"));
    if (is_blank(doc.text)) throw Error(at_line(start, "malformed record: empty text"));
    if (label_col >= 0 && !fields[static_cast<std::size_t>(label_col)].empty()) {
      try {
        doc.label = parse_label(fields[static_cast<std::size_t>(label_col)]);
      } catch (const Error& e) {
        throw Error(at_line(start, e.what()));
      }
    }
    docs.push_back(std::move(doc));
  }
  return Corpus(std::move(docs));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  std::set<std::string> seen;
  for (const auto& doc : documents_) {
    if (!seen.insert(doc.id).second) throw Error("duplicate document id '" + doc.id + "'");
    if (is_blank(doc.text)) throw Error("document '" + doc.id + "' has empty text");
    if (doc.label) ++class_counts_[static_cast<std::size_t>(code(*doc.label))];
  }
}

std::size_t Corpus::labeled_count() const {
  std::size_t n = 0;
  for (auto c : class_counts_) n += c;
  return n;
}

void Corpus::require_labeled() const {
  for (const auto& doc : documents_)
    if (!doc.label) throw Error("document '" + doc.id + "' has no label");
}

Corpus Corpus::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Document> docs;
  docs.reserve(indices.size());
  for (auto i : indices) docs.push_back(documents_.at(i));
  return Corpus(std::move(docs));
}

CorpusFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".csv" ? CorpusFormat::kCsv : CorpusFormat::kJsonl;
}

Corpus read_corpus(std::istream& in, CorpusFormat format) {
  return format == CorpusFormat::kCsv ? read_csv(in) : read_jsonl(in);
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file '" + path.string() + "'");
  return read_corpus(in, format);
}

Corpus load_corpus(const std::filesystem::path& path) {
  return load_corpus(path, format_for_path(path));
}

void write_corpus(std::ostream& out, const Corpus& corpus, CorpusFormat format) {
  if (format == CorpusFormat::kCsv) {
    out << "id,text,label\n";
    for (const auto& doc : corpus.documents()) {
      out << csv_quote(doc.id) << ',' << csv_quote(doc.text) << ',';
      if (doc.label) out << label_name(*doc.label);
      out << '\n';
    }
    return;
  }
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    record["text"] = doc.text;
    if (doc.label) record["label"] = std::string(label_name(*doc.label));
    out << record.dump() << '\n';
  }
}

void save_corpus(const std::filesystem::path& path, const Corpus& corpus,
                 CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file '" + path.string() + "'");
  write_corpus(out, corpus, format);
}

std::vector<std::size_t> FoldPlan::fold_indices(const Corpus& corpus, int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto it = assignments.find(corpus[i].id);
    if (it != assignments.end() && it->second == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::complement_indices(const Corpus& corpus, int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto it = assignments.find(corpus[i].id);
    if (it != assignments.end() && it->second != fold) out.push_back(i);
  }
  return out;
}

FoldPlan stratified_kfold(const Corpus& corpus, int k, std::uint64_t seed) {
  if (k < 2) throw Error("fold count must be at least 2, got " + std::to_string(k));
  for (Label label : kAllLabels) {
    auto n = corpus.class_counts()[static_cast<std::size_t>(code(label))];
    if (n < static_cast<std::size_t>(k))
      throw Error("class '" + std::string(label_name(label)) + "' has " + std::to_string(n) +
                  " labeled documents, fewer than k=" + std::to_string(k));
  }
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  std::size_t next_fold = 0;
  for (Label label : kAllLabels) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (corpus[i].label == label) members.push_back(i);
    Rng rng(seed, "folds", static_cast<std::uint64_t>(code(label)));
    rng.shuffle(std::span<std::size_t>(members));
    for (auto idx : members) {
      plan.assignments[corpus[idx].id] = static_cast<int>(next_fold);
      next_fold = (next_fold + 1) % static_cast<std::size_t>(k);
    }
  }
  return plan;
}

}  // namespace rgat
