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

#include "rgat/autodiff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rgat/error.hpp"
#include "rgat/rng.hpp"

namespace rgat::ad {

namespace {

std::string shape(const Tensor& t) {
  return std::to_string(t.rows()) + "x" + std::to_string(t.cols());
}

void require_same_tape(Var a, Var b) {
  if (a.tape != b.tape || a.tape == nullptr) throw Error("operands belong to different tapes");
}

}  // namespace

const Tensor& Var::value() const { return tape->value(id); }

Var Tape::record(Tensor value, BackwardFn backward) {
  Node node;
  node.value = std::move(value);
  node.backward = std::move(backward);
  nodes_.push_back(std::move(node));
  return Var{this, nodes_.size() - 1};
}

Var Tape::constant(Tensor value) { return record(std::move(value), nullptr); }

Var Tape::parameter(const Tensor& value) {
  Node node;
  node.external = &value;
  node.param_slot = static_cast<long>(params_.size());
  nodes_.push_back(std::move(node));
  params_.push_back(nodes_.size() - 1);
  return Var{this, nodes_.size() - 1};
}

Tensor& Tape::grad_slot(std::size_t id) {
  Node& node = nodes_[id];
  if (external_ != nullptr && node.param_slot >= 0)
    return (*external_)[static_cast<std::size_t>(node.param_slot)];
  if (!node.has_grad) {
    const Tensor& v = value(id);
    node.grad = Tensor::Zero(v.rows(), v.cols());
    node.has_grad = true;
  }
  return node.grad;
}

void Tape::note_kink_inputs(const Tensor& inputs) {
  for (Eigen::Index i = 0; i < inputs.size(); ++i) {
    double x = inputs.data()[i];
    kink_distance_ = std::min(kink_distance_, std::abs(x));
    kink_signature_.push_back(x >= 0.0);
  }
}

void Tape::run_backward(Var loss, double seed) {
  if (loss.tape != this) throw Error("loss was not recorded on this tape");
  const Tensor& l = value(loss.id);
  if (l.rows() != 1 || l.cols() != 1)
    throw Error("backward: loss must be 1x1, got " + shape(l));
  grad_slot(loss.id)(0, 0) += seed;
  for (std::size_t k = loss.id + 1; k-- > 0;) {
    Node& node = nodes_[k];
    if (!node.has_grad || !node.backward) continue;
    Tensor upstream = std::move(node.grad);
    node.has_grad = false;
    node.backward(*this, k, upstream);
    node.grad = std::move(upstream);
    node.has_grad = true;
  }
}

std::vector<Tensor> Tape::backward(Var loss) {
  run_backward(loss, 1.0);
  std::vector<Tensor> grads;
  grads.reserve(params_.size());
  for (std::size_t id : params_) {
    Node& node = nodes_[id];
    if (node.has_grad) {
      grads.push_back(std::move(node.grad));
    } else {
      const Tensor& v = value(id);
      grads.push_back(Tensor::Zero(v.rows(), v.cols()));
    }
  }
  reset();
  return grads;
}

void Tape::backward_into(Var loss, std::vector<Tensor>& accumulator, double scale) {
  if (accumulator.size() != params_.size())
    throw Error("backward_into: accumulator holds " + std::to_string(accumulator.size()) +
                " tensors for " + std::to_string(params_.size()) + " parameters");
  for (std::size_t slot = 0; slot < params_.size(); ++slot) {
    const Tensor& v = value(params_[slot]);
    if (accumulator[slot].rows() != v.rows() || accumulator[slot].cols() != v.cols())
      throw Error("backward_into: accumulator shape " + shape(accumulator[slot]) +
                  " does not match parameter " + shape(v));
  }
  // Parameter gradient slots alias the accumulator; seeding the loss with
  // `scale` scales every contribution.
  external_ = &accumulator;
  try {
    run_backward(loss, scale);
  } catch (...) {
    external_ = nullptr;
    reset();
    throw;
  }
  external_ = nullptr;
  reset();
}

void Tape::reset() {
  nodes_.clear();
  params_.clear();
  kink_distance_ = std::numeric_limits<double>::infinity();
  kink_signature_.clear();
}

Var matmul(Var a, Var b) {
  require_same_tape(a, b);
  const Tensor& av = a.value();
  const Tensor& bv = b.value();
  if (av.cols() != bv.rows())
    throw Error("matmul: shape mismatch " + shape(av) + " * " + shape(bv));
  Tensor out = av * bv;
  return a.tape->record(std::move(out), [a, b](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga.noalias() += g * t.value(b.id).transpose(); });
    t.accumulate(b.id, [&](Tensor& gb) { gb.noalias() += t.value(a.id).transpose() * g; });
  });
}

Var sparse_matmul(const SparseRows& x, Var w) {
  const Tensor& wv = w.value();
  if (x.cols() != wv.rows())
    throw Error("sparse_matmul: shape mismatch " + std::to_string(x.rows()) + "x" +
                std::to_string(x.cols()) + " * " + shape(wv));
  Tensor out = x * wv;
  return w.tape->record(std::move(out), [&x, w](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(w.id, [&](Tensor& gw) { gw.noalias() += x.transpose() * g; });
  });
}

Var add(Var a, Var b) {
  require_same_tape(a, b);
  const Tensor& av = a.value();
  const Tensor& bv = b.value();
  if (av.rows() != bv.rows() || av.cols() != bv.cols())
    throw Error("add: shape mismatch " + shape(av) + " + " + shape(bv));
  Tensor out = av + bv;
  return a.tape->record(std::move(out), [a, b](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga += g; });
    t.accumulate(b.id, [&](Tensor& gb) { gb += g; });
  });
}

Var scale(Var a, double c) {
  Tensor out = c * a.value();
  return a.tape->record(std::move(out), [a, c](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga += c * g; });
  });
}

Var concat_cols(Var a, Var b) {
  require_same_tape(a, b);
  const Tensor& av = a.value();
  const Tensor& bv = b.value();
  if (av.rows() != bv.rows())
    throw Error("concat_cols: shape mismatch " + shape(av) + " | " + shape(bv));
  Tensor out(av.rows(), av.cols() + bv.cols());
  out << av, bv;
  const Eigen::Index split = av.cols();
  return a.tape->record(std::move(out), [a, b, split](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga += g.leftCols(split); });
    t.accumulate(b.id, [&](Tensor& gb) { gb += g.rightCols(g.cols() - split); });
  });
}

Var transpose(Var a) {
  Tensor out = a.value().transpose();
  return a.tape->record(std::move(out), [a](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga += g.transpose(); });
  });
}

Var slice_rows(Var a, Eigen::Index start, Eigen::Index count) {
  const Tensor& av = a.value();
  if (start < 0 || count < 0 || start + count > av.rows())
    throw Error("slice_rows: rows [" + std::to_string(start) + ", " +
                std::to_string(start + count) + ") out of range for " + shape(av));
  Tensor out = av.middleRows(start, count);
  return a.tape->record(std::move(out), [a, start, count](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga.middleRows(start, count) += g; });
  });
}

Var leaky_relu(Var a, double slope) {
  const Tensor& av = a.value();
  a.tape->note_kink_inputs(av);
  Tensor out = rgat::leaky_relu(av, slope);
  return a.tape->record(std::move(out), [a, slope](Tape& t, std::size_t, const Tensor& g) {
    const Tensor& x = t.value(a.id);
    t.accumulate(a.id, [&](Tensor& ga) {
      ga.array() += g.array() * x.array().unaryExpr([slope](double v) { return v >= 0.0 ? 1.0 : slope; });
    });
  });
}

Var elu(Var a) {
  const Tensor& av = a.value();
  a.tape->note_kink_inputs(av);
  Tensor out = rgat::elu(av);
  return a.tape->record(std::move(out), [a](Tape& t, std::size_t, const Tensor& g) {
    const Tensor& x = t.value(a.id);
    t.accumulate(a.id, [&](Tensor& ga) {
      ga.array() += g.array() * x.array().unaryExpr([](double v) { return v > 0.0 ? 1.0 : std::exp(v); });
    });
  });
}

Var masked_row_softmax(Var scores, const BoolMatrix& mask) {
  Tensor out = rgat::masked_row_softmax(scores.value(), mask);
  return scores.tape->record(std::move(out), [scores](Tape& t, std::size_t self, const Tensor& g) {
    // dS_ij = y_ij * (g_ij - sum_k y_ik g_ik); y is exactly 0 off the mask.
    const Tensor& y = t.value(self);
    Eigen::VectorXd dots = (y.array() * g.array()).rowwise().sum();
    t.accumulate(scores.id, [&](Tensor& gs) {
      gs.array() += y.array() * (g.colwise() - dots).array();
    });
  });
}

Var row_mean(Var h) {
  const Tensor& hv = h.value();
  if (hv.rows() == 0) throw Error("row_mean: no rows");
  Tensor out = hv.colwise().mean();
  const double inv = 1.0 / static_cast<double>(hv.rows());
  return h.tape->record(std::move(out), [h, inv](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(h.id, [&](Tensor& gh) { gh.rowwise() += inv * g.row(0); });
  });
}

Var dropout(Var a, double keep_prob, bool train_mode, std::uint64_t seed) {
  if (!(keep_prob > 0.0 && keep_prob <= 1.0))
    throw Error("dropout: keep_prob must lie in (0, 1], got " + std::to_string(keep_prob));
  if (!train_mode || keep_prob == 1.0) {
    Tensor out = a.value();
    return a.tape->record(std::move(out), [a](Tape& t, std::size_t, const Tensor& g) {
      t.accumulate(a.id, [&](Tensor& ga) { ga += g; });
    });
  }
  const Tensor& av = a.value();
  Rng rng(seed);
  Tensor keep(av.rows(), av.cols());
  const double inv = 1.0 / keep_prob;
  for (Eigen::Index i = 0; i < keep.size(); ++i)
    keep.data()[i] = rng.uniform() < keep_prob ? inv : 0.0;
  Tensor out = av.cwiseProduct(keep);
  return a.tape->record(std::move(out), [a, keep = std::move(keep)](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga += g.cwiseProduct(keep); });
  });
}

Var cross_entropy_with_logits(Var logits, int target) {
  const Tensor& z = logits.value();
  if (z.rows() != 1) throw Error("cross_entropy_with_logits: logits must be 1xC, got " + shape(z));
  if (target < 0 || target >= z.cols())
    throw Error("cross_entropy_with_logits: target " + std::to_string(target) + " out of range for " +
                shape(z));
  Tensor out(1, 1);
  out(0, 0) = log_sum_exp(z) - z(0, target);
  return logits.tape->record(std::move(out), [logits, target](Tape& t, std::size_t, const Tensor& g) {
    Tensor p = softmax(t.value(logits.id));
    p(0, target) -= 1.0;
    t.accumulate(logits.id, [&](Tensor& gz) { gz += g(0, 0) * p; });
  });
}

Var sum(Var a) {
  Tensor out(1, 1);
  out(0, 0) = a.value().sum();
  return a.tape->record(std::move(out), [a](Tape& t, std::size_t, const Tensor& g) {
    t.accumulate(a.id, [&](Tensor& ga) { ga.array() += g(0, 0); });
  });
}

FiniteDiffReport finite_diff_check(const LossFunction& loss, std::vector<Tensor> params,
                                   const FiniteDiffOptions& options) {
  FiniteDiffReport report;
  if (params.empty()) return report;

  LossEvaluation base = loss(params, true);
  Rng rng(options.seed, "finite-diff");
  while (base.kink_distance < options.kink_margin && report.reseeds < options.max_reseeds) {
    for (auto& p : params)
      for (Eigen::Index i = 0; i < p.size(); ++i)
        p.data()[i] += rng.uniform(-options.offset_scale, options.offset_scale);
    base = loss(params, true);
    ++report.reseeds;
  }
  if (base.gradients.size() != params.size())
    throw Error("finite_diff_check: loss returned " + std::to_string(base.gradients.size()) +
                " gradients for " + std::to_string(params.size()) + " parameters");

  const double eps = options.eps;
  for (std::size_t p = 0; p < params.size(); ++p) {
    for (Eigen::Index i = 0; i < params[p].size(); ++i) {
      double& coord = params[p].data()[i];
      const double saved = coord;
      coord = saved + eps;
      LossEvaluation plus = loss(params, false);
      coord = saved - eps;
      LossEvaluation minus = loss(params, false);
      coord = saved;
      if (plus.kink_signature != base.kink_signature ||
          minus.kink_signature != base.kink_signature) {
        ++report.excluded;
        continue;
      }
      const double numeric = (plus.loss - minus.loss) / (2.0 * eps);
      const double analytic = base.gradients[p].data()[i];
      const double denom = std::max(1e-8, std::abs(analytic) + std::abs(numeric));
      report.max_relative_error =
          std::max(report.max_relative_error, std::abs(analytic - numeric) / denom);
      ++report.checked;
    }
  }
  return report;
}

}  // namespace rgat::ad
