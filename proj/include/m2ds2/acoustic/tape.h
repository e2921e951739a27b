// acoustic/tape.h

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

#ifndef M2DS2_ACOUSTIC_TAPE_H_
#define M2DS2_ACOUSTIC_TAPE_H_

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace m2ds2 {
namespace acoustic {

using Matrix = Eigen::MatrixXd;

struct Parameter {
  std::string name;
  Matrix value;
  bool trainable = true;
};

// Named, ordered parameter storage.  Order is the insertion order and is the
// order used by checkpoints, gradients and optimizers.
class ParameterSet {
 public:
  int Add(const std::string &name, Matrix value, bool trainable = true);
  int Index(const std::string &name) const;  // throws ConfigError if absent
  bool Contains(const std::string &name) const { return index_.count(name) > 0; }

  size_t size() const { return params_.size(); }
  Parameter &operator[](size_t i) { return params_[i]; }
  const Parameter &operator[](size_t i) const { return params_[i]; }
  const Matrix &Value(int i) const { return params_[i].value; }
  Matrix &MutableValue(int i) { return params_[i].value; }
  long long NumTrainableScalars() const;

 private:
  std::vector<Parameter> params_;
  std::unordered_map<std::string, int> index_;
};

// Gradient per parameter, aligned with a ParameterSet.  A 0x0 entry means
// the parameter received no gradient.
class Gradients {
 public:
  Gradients() = default;
  explicit Gradients(size_t n) : g_(n) {}
  size_t size() const { return g_.size(); }
  Matrix &operator[](size_t i) { return g_[i]; }
  const Matrix &operator[](size_t i) const { return g_[i]; }
  void Accumulate(size_t i, const Matrix &delta);
  void Add(const Gradients &other, double scale = 1.0);
  void Scale(double s);
  double SquaredNorm() const;

 private:
  std::vector<Matrix> g_;
};

class Tape;

// Handle to a node on a tape.
struct Var {
  Tape *tape = nullptr;
  int id = -1;
  const Matrix &value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
};

// Single-use reverse-mode recorder.  Values are computed eagerly; Backward
// replays the recorded adjoint rules in reverse order.
class Tape {
 public:
  explicit Tape(const ParameterSet *params = nullptr) : params_(params) {}

  Var Constant(Matrix value);
  // Trainable parameters get their adjoint written to Backward's output.
  Var Param(int index);
  Var Param(const std::string &name);

  const Matrix &Value(Var v) const { return nodes_[v.id].value; }
  size_t size() const { return nodes_.size(); }

  // Generic node: backward receives the output adjoint and must add into
  // the adjoints of its inputs through AddGrad.
  Var Record(Matrix value, std::vector<Var> inputs,
             std::function<void(Tape &, const Matrix &)> backward);
  void AddGrad(Var v, const Matrix &g);

  // Seeds d(out)/d(out) = seed (out must be 1x1) and adds the adjoint of
  // every trainable parameter into grads, which is resized if empty.
  void Backward(Var out, Gradients *grads, double seed = 1.0);
  // Adjoint of an arbitrary node after Backward (empty if unreachable).
  const Matrix &Grad(Var v) const { return nodes_[v.id].grad; }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    std::vector<int> inputs;
    std::function<void(Tape &, const Matrix &)> backward;
    int param = -1;
    bool needs_grad = false;
  };
  const ParameterSet *params_;
  std::vector<Node> nodes_;
};

// Differentiable operations.  Shapes follow Eigen conventions; "rows" are
// time steps throughout the model.
Var MatMul(Var a, Var b);
Var Add(Var a, Var b);
Var Sub(Var a, Var b);
Var AddRow(Var a, Var row);  // broadcasts a 1xN row over every row of a
Var Scale(Var a, double s);
Var CwiseMul(Var a, Var b);
Var Transpose(Var a);
Var Gelu(Var a);
Var Tanh(Var a);
// Row-wise normalization with learned 1xN gain and bias.
Var LayerNormRows(Var x, Var gain, Var bias, double eps = 1e-5);
Var SoftmaxRows(Var a);
Var LogSoftmaxRows(Var a);
Var SliceCols(Var a, Eigen::Index begin, Eigen::Index n);
Var SliceRows(Var a, Eigen::Index begin, Eigen::Index n);
Var ConcatCols(const std::vector<Var> &parts);
Var ConcatRows(const std::vector<Var> &parts);
Var GatherRows(Var a, const std::vector<int> &rows);
// Rows with mask[t] set are replaced by the 1xN row `fill`.
Var ReplaceRows(Var a, const std::vector<bool> &mask, Var fill);
Var MeanRows(Var a);  // 1xN
Var Sum(Var a);       // 1x1
// Forward value of `hard`, adjoint routed to `soft` unchanged.
Var StraightThrough(const Matrix &hard, Var soft);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_TAPE_H_
