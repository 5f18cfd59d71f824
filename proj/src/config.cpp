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

#include "rgat/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "rgat/error.hpp"

namespace rgat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw UsageError("config key '" + key + "': invalid value '" + value + "'");
  return out;
}

template <typename Enum, typename Parse>
Enum parse_enum(const std::string& key, const std::string& value, Parse parse) {
  try {
    return parse(value);
  } catch (const Error& e) {
    throw UsageError("config key '" + key + "': " + e.what());
  }
}

using Setter = std::function<void(PipelineConfig&, const std::string& key, const std::string& value)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"learning_rate", [](auto& c, auto& k, auto& v) { c.train.learning_rate = parse_number<double>(k, v); }},
      {"epochs", [](auto& c, auto& k, auto& v) { c.train.epochs = parse_number<int>(k, v); }},
      {"early_stop_patience", [](auto& c, auto& k, auto& v) { c.train.early_stop_patience = parse_number<int>(k, v); }},
      {"class_weighting", [](auto& c, auto& k, auto& v) { c.train.class_weighting = parse_enum<ClassWeighting>(k, v, parse_weighting); }},
      {"l2", [](auto& c, auto& k, auto& v) { c.train.l2 = parse_number<double>(k, v); }},
      {"beta1", [](auto& c, auto& k, auto& v) { c.train.beta1 = parse_number<double>(k, v); }},
      {"beta2", [](auto& c, auto& k, auto& v) { c.train.beta2 = parse_number<double>(k, v); }},
      {"adam_epsilon", [](auto& c, auto& k, auto& v) { c.train.adam_epsilon = parse_number<double>(k, v); }},
      {"threads", [](auto& c, auto& k, auto& v) { c.train.threads = parse_number<int>(k, v); }},
      {"hidden_dim", [](auto& c, auto& k, auto& v) { c.model.hidden_dim = parse_number<int>(k, v); }},
      {"heads", [](auto& c, auto& k, auto& v) { c.model.heads = parse_number<int>(k, v); }},
      {"leaky_slope", [](auto& c, auto& k, auto& v) { c.model.leaky_slope = parse_number<double>(k, v); }},
      {"activation", [](auto& c, auto& k, auto& v) { c.model.activation = parse_enum<Activation>(k, v, parse_activation); }},
      {"dropout_keep", [](auto& c, auto& k, auto& v) { c.model.dropout_keep = parse_number<double>(k, v); }},
      {"tau", [](auto& c, auto& k, auto& v) { c.tau = parse_number<double>(k, v); }},
      {"max_features", [](auto& c, auto& k, auto& v) { c.max_features = parse_number<std::size_t>(k, v); }},
      {"ngram_mode", [](auto& c, auto& k, auto& v) { c.ngram_mode = parse_enum<NgramMode>(k, v, parse_ngram_mode); }},
      {"val_fraction", [](auto& c, auto& k, auto& v) { c.val_fraction = parse_number<double>(k, v); }},
      {"smote_k", [](auto& c, auto& k, auto& v) { c.smote_k = parse_number<int>(k, v); }},
      {"mnb_alpha", [](auto& c, auto& k, auto& v) { c.mnb_alpha = parse_number<double>(k, v); }},
      {"logreg_learning_rate", [](auto& c, auto& k, auto& v) { c.logreg.learning_rate = parse_number<double>(k, v); }},
      {"logreg_epochs", [](auto& c, auto& k, auto& v) { c.logreg.epochs = parse_number<int>(k, v); }},
      {"logreg_l2", [](auto& c, auto& k, auto& v) { c.logreg.l2 = parse_number<double>(k, v); }},
  };
  return table;
}

void validate(const PipelineConfig& c) {
  try {
    c.train.validate();
    RgatConfig m = c.model;
    m.input_dim = 1;
    m.validate();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!(c.tau >= 0.0 && c.tau <= 1.0)) throw UsageError("config key 'tau': must lie in [0, 1]");
  if (c.max_features < 1) throw UsageError("config key 'max_features': must be positive");
  if (!(c.val_fraction > 0.0 && c.val_fraction < 1.0))
    throw UsageError("config key 'val_fraction': must lie in (0, 1)");
  if (c.smote_k < 1) throw UsageError("config key 'smote_k': must be positive");
  if (!(c.mnb_alpha > 0.0)) throw UsageError("config key 'mnb_alpha': must be positive");
  if (!(c.logreg.learning_rate > 0.0) || c.logreg.epochs < 1)
    throw UsageError("config: logreg_learning_rate must be positive and logreg_epochs >= 1");
}

}  // namespace

PipelineConfig parse_config(std::istream& in, PipelineConfig config) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters().find(key);
    if (it == setters().end()) throw UsageError("unknown config key '" + key + "'");
    it->second(config, key, value);
  }
  validate(config);
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

static std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_config(const PipelineConfig& c) {
  std::ostringstream out;
  out << "learning_rate = " << shortest(c.train.learning_rate) << '\n'
      << "epochs = " << c.train.epochs << '\n'
      << "early_stop_patience = " << c.train.early_stop_patience << '\n'
      << "class_weighting = " << weighting_name(c.train.class_weighting) << '\n'
      << "l2 = " << shortest(c.train.l2) << '\n'
      << "beta1 = " << shortest(c.train.beta1) << '\n'
      << "beta2 = " << shortest(c.train.beta2) << '\n'
      << "adam_epsilon = " << shortest(c.train.adam_epsilon) << '\n'
      << "threads = " << c.train.threads << '\n'
      << "hidden_dim = " << c.model.hidden_dim << '\n'
      << "heads = " << c.model.heads << '\n'
      << "leaky_slope = " << shortest(c.model.leaky_slope) << '\n'
      << "activation = " << activation_name(c.model.activation) << '\n'
      << "dropout_keep = " << shortest(c.model.dropout_keep) << '\n'
      << "tau = " << shortest(c.tau) << '\n'
      << "max_features = " << c.max_features << '\n'
      << "ngram_mode = " << ngram_mode_name(c.ngram_mode) << '\n'
      << "val_fraction = " << shortest(c.val_fraction) << '\n'
      << "smote_k = " << c.smote_k << '\n'
      << "mnb_alpha = " << shortest(c.mnb_alpha) << '\n'
      << "logreg_learning_rate = " << shortest(c.logreg.learning_rate) << '\n'
      << "logreg_epochs = " << c.logreg.epochs << '\n'
      << "logreg_l2 = " << shortest(c.logreg.l2) << '\n';
  return out.str();
}

}  // namespace rgat
