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

#include "test_util.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rgat/error.hpp"

#ifndef RGAT_TEST_DATA_DIR
#error "RGAT_TEST_DATA_DIR must be defined"
#endif

namespace rgat::testing {

std::filesystem::path data_dir() { return RGAT_TEST_DATA_DIR; }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rgat_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DocumentGraph random_graph(Rng& rng, std::size_t n, std::size_t f, std::optional<Label> label) {
  DocumentGraph g;
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < f; ++j)
      if (rng.uniform() < 0.7) {
        // Box-Muller keeps this independent of <random> distributions.
        const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), z);
      }
  g.node_features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(f));
  g.node_features.setFromTriplets(triplets.begin(), triplets.end());
  g.node_features.makeCompressed();
  std::map<std::pair<std::size_t, std::size_t>, double> w;
  for (std::size_t i = 0; i < n; ++i) {
    w[{i, i}] = 1.0;
    if (i + 1 < n) w[{i, i + 1}] = w[{i + 1, i}] = 1.0;
    for (std::size_t j = i + 2; j < n; ++j)
      if (rng.uniform() < 0.3) w[{i, j}] = w[{j, i}] = rng.uniform(0.35, 1.0);
  }
  for (const auto& [key, weight] : w) g.edges.push_back({key.first, key.second, weight});
  g.label = label;
  g.validate();
  return g;
}

RgatConfig random_config(Rng& rng, int f) {
  RgatConfig c;
  c.input_dim = f;
  c.heads = 1 + static_cast<int>(rng.below(2));
  c.hidden_dim = c.heads * (1 + static_cast<int>(rng.below(2)));
  c.dropout_keep = 0.5;
  return c;
}

ad::LossFunction model_loss(const RgatModel& base, const DocumentGraph& graph, int target,
                            bool train_mode, std::uint64_t dropout_seed) {
  return [base, &graph, target, train_mode, dropout_seed](const std::vector<ad::Tensor>& params,
                                                          bool with_gradients) {
    RgatModel m = base;
    auto slots = m.parameters();
    for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = params[i];
    ad::Tape tape;
    const ModelVars vars = register_parameters(tape, m);
    const ad::Var logits = rgat_logits(m, vars, graph, train_mode, dropout_seed);
    const ad::Var loss = ad::cross_entropy_with_logits(logits, target);
    ad::LossEvaluation ev;
    ev.loss = loss.value()(0, 0);
    ev.kink_distance = tape.kink_distance();
    ev.kink_signature = tape.kink_signature();
    if (with_gradients) ev.gradients = tape.backward(loss);
    return ev;
  };
}

}  // namespace rgat::testing
