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

#include "rgat/metrics.hpp"

#include "rgat/error.hpp"

namespace rgat {

Eigen::Matrix4d ConfusionMatrix::row_normalized() const {
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int r = 0; r < 4; ++r) {
    const auto support = counts.row(r).sum();
    if (support == 0) continue;
    for (int c = 0; c < 4; ++c)
      out(r, c) = static_cast<double>(counts(r, c)) / static_cast<double>(support);
  }
  return out;
}

Metrics compute_metrics(const ConfusionMatrix& confusion) {
  const auto& m = confusion.counts;
  Metrics out;
  double f1_sum = 0.0;
  for (int c = 0; c < 4; ++c) {
    const auto tp = m(c, c);
    const auto predicted = m.col(c).sum();
    const auto support = m.row(c).sum();
    ClassScores& s = out.per_class[static_cast<std::size_t>(c)];
    s.support = support;
    s.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(predicted);
    s.recall = support == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(support);
    const double pr = s.precision + s.recall;
    s.f1 = pr == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / pr;
    f1_sum += s.f1;
  }
  out.macro_f1 = f1_sum / 4.0;
  const auto total = m.sum();
  out.accuracy = total == 0 ? 0.0 : static_cast<double>(m.trace()) / static_cast<double>(total);
  return out;
}

ConfusionMatrix confusion_from(const std::vector<Label>& truth, const std::vector<Label>& predicted) {
  if (truth.size() != predicted.size()) throw Error("confusion_from: size mismatch");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) cm.add(truth[i], predicted[i]);
  return cm;
}

}  // namespace rgat
