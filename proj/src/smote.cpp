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

#include "rgat/smote.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "rgat/error.hpp"
#include "rgat/rng.hpp"

namespace rgat {

SmoteResult smote_oversample(const Eigen::MatrixXd& rows, const std::vector<Label>& labels,
                             int k_neighbors, std::uint64_t seed) {
  if (static_cast<std::size_t>(rows.rows()) != labels.size())
    throw Error("smote: " + std::to_string(rows.rows()) + " rows but " +
                std::to_string(labels.size()) + " labels");
  if (k_neighbors < 1) throw Error("smote: k_neighbors must be >= 1");

  std::array<std::vector<std::size_t>, kNumClasses> members;
  for (std::size_t i = 0; i < labels.size(); ++i)
    members[static_cast<std::size_t>(code(labels[i]))].push_back(i);
  std::size_t majority = 0;
  for (const auto& m : members) majority = std::max(majority, m.size());

  std::size_t total = labels.size();
  for (Label label : kAllLabels) {
    const auto& m = members[static_cast<std::size_t>(code(label))];
    if (m.empty() || m.size() == majority) continue;
    if (m.size() < 2)
      throw Error("smote: class '" + std::string(label_name(label)) +
                  "' has a single member; cannot interpolate");
    total += majority - m.size();
  }

  SmoteResult out;
  out.rows.resize(static_cast<Eigen::Index>(total), rows.cols());
  out.rows.topRows(rows.rows()) = rows;
  out.labels = labels;
  Eigen::Index next = rows.rows();

  Rng rng(seed, "smote");
  for (Label label : kAllLabels) {
    const auto& m = members[static_cast<std::size_t>(code(label))];
    if (m.empty() || m.size() == majority) continue;
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_neighbors), m.size() - 1);

    // k nearest same-class neighbours of each member, by position in `m`.
    std::vector<std::vector<std::size_t>> nearest(m.size());
    for (std::size_t a = 0; a < m.size(); ++a) {
      std::vector<std::pair<double, std::size_t>> dist;
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (a == b) continue;
        double d = (rows.row(static_cast<Eigen::Index>(m[a])) -
                    rows.row(static_cast<Eigen::Index>(m[b])))
                       .squaredNorm();
        dist.emplace_back(d, m[b]);
      }
      std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
      for (std::size_t t = 0; t < k; ++t) nearest[a].push_back(dist[t].second);
    }

    for (std::size_t s = m.size(); s < majority; ++s) {
      std::size_t pick = static_cast<std::size_t>(rng.below(m.size()));
      std::size_t neighbor = nearest[pick][static_cast<std::size_t>(rng.below(k))];
      double lambda = rng.uniform();
      const auto base_row = rows.row(static_cast<Eigen::Index>(m[pick]));
      out.rows.row(next) =
          base_row + lambda * (rows.row(static_cast<Eigen::Index>(neighbor)) - base_row);
      out.labels.push_back(label);
      out.synthetic_origins.push_back({m[pick], neighbor, lambda});
      ++next;
    }
  }
  return out;
}

}  // namespace rgat
