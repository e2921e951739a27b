// acoustic/tape.cc

// Copyright 2026  The M2DS2 Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "m2ds2/acoustic/tape.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace acoustic {

int ParameterSet::Add(const std::string &name, Matrix value, bool trainable) {
  if (index_.count(name)) throw ConfigError("duplicate parameter " + name);
  int id = static_cast<int>(params_.size());
  params_.push_back({name, std::move(value), trainable});
  index_.emplace(name, id);
  return id;
}

int ParameterSet::Index(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown parameter " + name);
  return it->second;
}

long long ParameterSet::NumTrainableScalars() const {
  long long n = 0;
  for (const auto &p : params_)
    if (p.trainable) n += p.value.size();
  return n;
}

void Gradients::Accumulate(size_t i, const Matrix &delta) {
  if (g_[i].size() == 0)
    g_[i] = delta;
  else
    g_[i] += delta;
}

void Gradients::Add(const Gradients &other, double scale) {
  if (g_.empty()) g_.resize(other.size());
  if (other.size() != g_.size()) throw ConfigError("gradient sets differ in size");
  for (size_t i = 0; i < g_.size(); ++i) {
    if (other.g_[i].size() == 0) continue;
    if (g_[i].size() == 0)
      g_[i] = scale * other.g_[i];
    else
      g_[i] += scale * other.g_[i];
  }
}

void Gradients::Scale(double s) {
  for (auto &m : g_) m *= s;
}

double Gradients::SquaredNorm() const {
  double s = 0.0;
  for (const auto &m : g_) s += m.squaredNorm();
  return s;
}

const Matrix &Var::value() const { return tape->Value(*this); }

Var Tape::Constant(Matrix value) {
  Node n;
  n.value = std::move(value);
  nodes_.push_back(std::move(n));
  return Var{this, static_cast<int>(nodes_.size() - 1)};
}

Var Tape::Param(int index) {
  if (params_ == nullptr) throw ConfigError("tape has no parameter set");
  const Parameter &p = (*params_)[index];
  Node n;
  n.value = p.value;
  n.param = index;
  n.needs_grad = p.trainable;
  nodes_.push_back(std::move(n));
  return Var{this, static_cast<int>(nodes_.size() - 1)};
}

Var Tape::Param(const std::string &name) { return Param(params_->Index(name)); }

Var Tape::Record(Matrix value, std::vector<Var> inputs,
                 std::function<void(Tape &, const Matrix &)> backward) {
  Node n;
  n.value = std::move(value);
  for (const Var &v : inputs) {
    if (v.tape != this) throw ConfigError("variable from a different tape");
    n.inputs.push_back(v.id);
    n.needs_grad = n.needs_grad || nodes_[v.id].needs_grad;
  }
  if (n.needs_grad) n.backward = std::move(backward);
  nodes_.push_back(std::move(n));
  return Var{this, static_cast<int>(nodes_.size() - 1)};
}

void Tape::AddGrad(Var v, const Matrix &g) {
  Node &n = nodes_[v.id];
  if (!n.needs_grad) return;
  if (n.grad.size() == 0)
    n.grad = g;
  else
    n.grad += g;
}

void Tape::Backward(Var out, Gradients *grads, double seed) {
  if (Value(out).size() != 1) throw ConfigError("Backward needs a scalar output");
  if (grads->size() == 0 && params_ != nullptr) *grads = Gradients(params_->size());
  for (auto &n : nodes_) n.grad.resize(0, 0);
  AddGrad(out, Matrix::Constant(1, 1, seed));
  for (int i = out.id; i >= 0; --i) {
    Node &n = nodes_[i];
    if (!n.needs_grad || n.grad.size() == 0) continue;
    if (n.param >= 0) grads->Accumulate(n.param, n.grad);
    if (n.backward) n.backward(*this, n.grad);
  }
}

Var MatMul(Var a, Var b) {
  Tape &t = *a.tape;
  if (a.cols() != b.rows()) throw ConfigError("MatMul shape mismatch");
  return t.Record(a.value() * b.value(), {a, b}, [a, b](Tape &t, const Matrix &g) {
    t.AddGrad(a, g * t.Value(b).transpose());
    t.AddGrad(b, t.Value(a).transpose() * g);
  });
}

Var Add(Var a, Var b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ConfigError("Add shape mismatch");
  return a.tape->Record(a.value() + b.value(), {a, b}, [a, b](Tape &t, const Matrix &g) {
    t.AddGrad(a, g);
    t.AddGrad(b, g);
  });
}

Var Sub(Var a, Var b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ConfigError("Sub shape mismatch");
  return a.tape->Record(a.value() - b.value(), {a, b}, [a, b](Tape &t, const Matrix &g) {
    t.AddGrad(a, g);
    t.AddGrad(b, -g);
  });
}

Var AddRow(Var a, Var row) {
  if (row.rows() != 1 || row.cols() != a.cols()) throw ConfigError("AddRow shape mismatch");
  Matrix v = a.value().rowwise() + row.value().row(0);
  return a.tape->Record(std::move(v), {a, row}, [a, row](Tape &t, const Matrix &g) {
    t.AddGrad(a, g);
    t.AddGrad(row, g.colwise().sum());
  });
}

Var Scale(Var a, double s) {
  return a.tape->Record(a.value() * s, {a}, [a, s](Tape &t, const Matrix &g) {
    t.AddGrad(a, g * s);
  });
}

Var CwiseMul(Var a, Var b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ConfigError("CwiseMul shape mismatch");
  return a.tape->Record(a.value().cwiseProduct(b.value()), {a, b},
                        [a, b](Tape &t, const Matrix &g) {
                          t.AddGrad(a, g.cwiseProduct(t.Value(b)));
                          t.AddGrad(b, g.cwiseProduct(t.Value(a)));
                        });
}

Var Transpose(Var a) {
  return a.tape->Record(a.value().transpose(), {a}, [a](Tape &t, const Matrix &g) {
    t.AddGrad(a, g.transpose());
  });
}

Var Gelu(Var a) {
  const Matrix &x = a.value();
  Matrix y = x.unaryExpr([](double v) { return 0.5 * v * (1.0 + std::erf(v * M_SQRT1_2)); });
  return a.tape->Record(std::move(y), {a}, [a](Tape &t, const Matrix &g) {
    Matrix d = t.Value(a).unaryExpr([](double v) {
      return 0.5 * (1.0 + std::erf(v * M_SQRT1_2)) + v * std::exp(-0.5 * v * v) * 0.5 * M_2_SQRTPI * M_SQRT1_2;
    });
    t.AddGrad(a, g.cwiseProduct(d));
  });
}

Var Tanh(Var a) {
  Matrix y = a.value().array().tanh().matrix();
  return a.tape->Record(y, {a}, [a, y](Tape &t, const Matrix &g) {
    t.AddGrad(a, g.cwiseProduct((1.0 - y.array().square()).matrix()));
  });
}

Var LayerNormRows(Var x, Var gain, Var bias, double eps) {
  const Matrix &X = x.value();
  const Eigen::Index n = X.cols();
  if (gain.rows() != 1 || gain.cols() != n || bias.rows() != 1 || bias.cols() != n)
    throw ConfigError("LayerNorm gain/bias shape mismatch");
  Matrix xhat(X.rows(), n);
  Eigen::VectorXd inv_std(X.rows());
  for (Eigen::Index r = 0; r < X.rows(); ++r) {
    double mu = X.row(r).mean();
    double var = (X.row(r).array() - mu).square().mean();
    inv_std(r) = 1.0 / std::sqrt(var + eps);
    xhat.row(r) = (X.row(r).array() - mu) * inv_std(r);
  }
  Matrix y = (xhat.array().rowwise() * gain.value().row(0).array()).matrix();
  y.rowwise() += bias.value().row(0);
  return x.tape->Record(std::move(y), {x, gain, bias},
                        [x, gain, bias, xhat, inv_std, n](Tape &t, const Matrix &g) {
                          t.AddGrad(bias, g.colwise().sum());
                          t.AddGrad(gain, g.cwiseProduct(xhat).colwise().sum());
                          Matrix dxhat = (g.array().rowwise() * t.Value(gain).row(0).array()).matrix();
                          Matrix dx(dxhat.rows(), n);
                          for (Eigen::Index r = 0; r < dxhat.rows(); ++r) {
                            double s1 = dxhat.row(r).sum();
                            double s2 = dxhat.row(r).dot(xhat.row(r));
                            dx.row(r) = (inv_std(r) / static_cast<double>(n)) *
                                        (static_cast<double>(n) * dxhat.row(r).array() - s1 -
                                         xhat.row(r).array() * s2)
                                            .matrix();
                          }
                          t.AddGrad(x, dx);
                        });
}

namespace {
Matrix RowSoftmax(const Matrix &a) {
  Matrix s(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double m = a.row(r).maxCoeff();
    Eigen::RowVectorXd e = (a.row(r).array() - m).exp().matrix();
    s.row(r) = e / e.sum();
  }
  return s;
}
}  // namespace

Var SoftmaxRows(Var a) {
  Matrix s = RowSoftmax(a.value());
  return a.tape->Record(s, {a}, [a, s](Tape &t, const Matrix &g) {
    Eigen::VectorXd dot = g.cwiseProduct(s).rowwise().sum();
    Matrix dx = s.cwiseProduct((g.colwise() - dot));
    t.AddGrad(a, dx);
  });
}

Var LogSoftmaxRows(Var a) {
  const Matrix &x = a.value();
  Matrix y(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    double m = x.row(r).maxCoeff();
    double lse = m + std::log((x.row(r).array() - m).exp().sum());
    y.row(r) = x.row(r).array() - lse;
  }
  Matrix s = y.array().exp().matrix();
  return a.tape->Record(std::move(y), {a}, [a, s](Tape &t, const Matrix &g) {
    Eigen::VectorXd gs = g.rowwise().sum();
    Matrix dx = g - (s.array().colwise() * gs.array()).matrix();
    t.AddGrad(a, dx);
  });
}

Var SliceCols(Var a, Eigen::Index begin, Eigen::Index n) {
  if (begin < 0 || n < 0 || begin + n > a.cols()) throw ConfigError("SliceCols out of range");
  Eigen::Index rows = a.rows(), cols = a.cols();
  return a.tape->Record(a.value().middleCols(begin, n), {a},
                        [a, begin, n, rows, cols](Tape &t, const Matrix &g) {
                          Matrix full = Matrix::Zero(rows, cols);
                          full.middleCols(begin, n) = g;
                          t.AddGrad(a, full);
                        });
}

Var SliceRows(Var a, Eigen::Index begin, Eigen::Index n) {
  if (begin < 0 || n < 0 || begin + n > a.rows()) throw ConfigError("SliceRows out of range");
  Eigen::Index rows = a.rows(), cols = a.cols();
  return a.tape->Record(a.value().middleRows(begin, n), {a},
                        [a, begin, n, rows, cols](Tape &t, const Matrix &g) {
                          Matrix full = Matrix::Zero(rows, cols);
                          full.middleRows(begin, n) = g;
                          t.AddGrad(a, full);
                        });
}

Var ConcatCols(const std::vector<Var> &parts) {
  if (parts.empty()) throw ConfigError("ConcatCols of nothing");
  Eigen::Index rows = parts[0].rows(), cols = 0;
  for (const Var &p : parts) {
    if (p.rows() != rows) throw ConfigError("ConcatCols row mismatch");
    cols += p.cols();
  }
  Matrix v(rows, cols);
  std::vector<Eigen::Index> offsets;
  Eigen::Index off = 0;
  for (const Var &p : parts) {
    v.middleCols(off, p.cols()) = p.value();
    offsets.push_back(off);
    off += p.cols();
  }
  return parts[0].tape->Record(std::move(v), parts, [parts, offsets](Tape &t, const Matrix &g) {
    for (size_t i = 0; i < parts.size(); ++i)
      t.AddGrad(parts[i], g.middleCols(offsets[i], parts[i].cols()));
  });
}

Var ConcatRows(const std::vector<Var> &parts) {
  if (parts.empty()) throw ConfigError("ConcatRows of nothing");
  Eigen::Index cols = parts[0].cols(), rows = 0;
  for (const Var &p : parts) {
    if (p.cols() != cols) throw ConfigError("ConcatRows column mismatch");
    rows += p.rows();
  }
  Matrix v(rows, cols);
  std::vector<Eigen::Index> offsets;
  Eigen::Index off = 0;
  for (const Var &p : parts) {
    v.middleRows(off, p.rows()) = p.value();
    offsets.push_back(off);
    off += p.rows();
  }
  return parts[0].tape->Record(std::move(v), parts, [parts, offsets](Tape &t, const Matrix &g) {
    for (size_t i = 0; i < parts.size(); ++i)
      t.AddGrad(parts[i], g.middleRows(offsets[i], parts[i].rows()));
  });
}

Var GatherRows(Var a, const std::vector<int> &rows) {
  Matrix v(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= a.rows()) throw ConfigError("GatherRows index out of range");
    v.row(i) = a.value().row(rows[i]);
  }
  Eigen::Index nr = a.rows(), nc = a.cols();
  return a.tape->Record(std::move(v), {a}, [a, rows, nr, nc](Tape &t, const Matrix &g) {
    Matrix full = Matrix::Zero(nr, nc);
    for (size_t i = 0; i < rows.size(); ++i) full.row(rows[i]) += g.row(i);
    t.AddGrad(a, full);
  });
}

Var ReplaceRows(Var a, const std::vector<bool> &mask, Var fill) {
  if (static_cast<Eigen::Index>(mask.size()) != a.rows())
    throw ConfigError("mask length differs from sequence length");
  if (fill.rows() != 1 || fill.cols() != a.cols()) throw ConfigError("fill row shape mismatch");
  Matrix v = a.value();
  for (size_t r = 0; r < mask.size(); ++r)
    if (mask[r]) v.row(r) = fill.value().row(0);
  return a.tape->Record(std::move(v), {a, fill}, [a, mask, fill](Tape &t, const Matrix &g) {
    Matrix ga = g;
    Matrix gf = Matrix::Zero(1, g.cols());
    for (size_t r = 0; r < mask.size(); ++r) {
      if (!mask[r]) continue;
      gf += g.row(r);
      ga.row(r).setZero();
    }
    t.AddGrad(a, ga);
    t.AddGrad(fill, gf);
  });
}

Var MeanRows(Var a) {
  Eigen::Index nr = a.rows();
  if (nr == 0) throw ConfigError("MeanRows of an empty matrix");
  return a.tape->Record(a.value().colwise().mean(), {a}, [a, nr](Tape &t, const Matrix &g) {
    t.AddGrad(a, g.replicate(nr, 1) / static_cast<double>(nr));
  });
}

Var Sum(Var a) {
  Eigen::Index nr = a.rows(), nc = a.cols();
  return a.tape->Record(Matrix::Constant(1, 1, a.value().sum()), {a},
                        [a, nr, nc](Tape &t, const Matrix &g) {
                          t.AddGrad(a, Matrix::Constant(nr, nc, g(0, 0)));
                        });
}

Var StraightThrough(const Matrix &hard, Var soft) {
  if (hard.rows() != soft.rows() || hard.cols() != soft.cols())
    throw ConfigError("StraightThrough shape mismatch");
  return soft.tape->Record(hard, {soft}, [soft](Tape &t, const Matrix &g) { t.AddGrad(soft, g); });
}

}  // namespace acoustic
}  // namespace m2ds2
