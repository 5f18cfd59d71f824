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

// Plain Eigen kernels shared by the differentiable primitives and by tests.
// They are templated on the expression type so any dense scalar works.

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "rgat/error.hpp"

namespace rgat {

using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
typename Derived::PlainObject leaky_relu(const Eigen::MatrixBase<Derived>& x,
                                         typename Derived::Scalar slope) {
  using Scalar = typename Derived::Scalar;
  return x.unaryExpr([slope](Scalar v) { return v >= Scalar(0) ? v : slope * v; });
}

template <typename Derived>
typename Derived::PlainObject elu(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  return x.unaryExpr([](Scalar v) { return v > Scalar(0) ? v : std::expm1(v); });
}

/// Row-wise softmax restricted to entries where `mask` is true, with the
/// row maximum subtracted first. Entries outside the mask are exactly 0.
template <typename Derived>
typename Derived::PlainObject masked_row_softmax(const Eigen::MatrixBase<Derived>& scores,
                                                 const BoolMatrix& mask) {
  using Scalar = typename Derived::Scalar;
  if (mask.rows() != scores.rows() || mask.cols() != scores.cols())
    throw Error("masked_row_softmax: mask " + std::to_string(mask.rows()) + "x" +
                std::to_string(mask.cols()) + " does not match scores " +
                std::to_string(scores.rows()) + "x" + std::to_string(scores.cols()));
  typename Derived::PlainObject out(scores.rows(), scores.cols());
  out.setZero();
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    bool any = false;
    Scalar max = Scalar(0);
    for (Eigen::Index j = 0; j < scores.cols(); ++j) {
      if (!mask(i, j)) continue;
      if (!any || scores(i, j) > max) max = scores(i, j);
      any = true;
    }
    if (!any) throw Error("masked_row_softmax: row " + std::to_string(i) + " has an empty mask");
    Scalar sum = Scalar(0);
    for (Eigen::Index j = 0; j < scores.cols(); ++j) {
      if (!mask(i, j)) continue;
      out(i, j) = std::exp(scores(i, j) - max);
      sum += out(i, j);
    }
    out.row(i) /= sum;
  }
  return out;
}

/// Dense softmax of a single row vector.
template <typename Derived>
typename Derived::PlainObject softmax(const Eigen::MatrixBase<Derived>& z) {
  typename Derived::PlainObject e = (z.array() - z.maxCoeff()).exp().matrix();
  return e / e.sum();
}

template <typename Derived>
typename Derived::Scalar log_sum_exp(const Eigen::MatrixBase<Derived>& z) {
  auto max = z.maxCoeff();
  return max + std::log((z.array() - max).exp().sum());
}

/// Index of the largest entry; ties go to the lowest index.
template <typename Derived>
Eigen::Index argmax(const Eigen::MatrixBase<Derived>& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (v(i) > v(best)) best = i;
  return best;
}

}  // namespace rgat
