// objectives/diversity-loss.cc

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

#include "m2ds2/objectives/diversity-loss.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace objectives {

double Entropy(const Eigen::Ref<const Eigen::RowVectorXd> &p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) h -= p(i) * std::log(p(i));
  return h;
}

namespace {
void CheckLayout(const Matrix &pbar, int G) {
  if (G < 1 || pbar.rows() != 1 || pbar.cols() % G != 0 || pbar.cols() / G < 2)
    throw ConfigError("pbar must be one row of G blocks of V >= 2 entries");
}
}  // namespace

std::vector<double> DiversityPerCodebook(const Matrix &pbar, int G) {
  CheckLayout(pbar, G);
  const Eigen::Index V = pbar.cols() / G;
  std::vector<double> out;
  for (int g = 0; g < G; ++g) {
    double h = Entropy(pbar.row(0).segment(g * V, V));
    out.push_back((static_cast<double>(V) - std::exp(h)) / static_cast<double>(V));
  }
  return out;
}

double DiversityLoss(const Matrix &pbar, int G, Matrix *grad) {
  CheckLayout(pbar, G);
  const Eigen::Index V = pbar.cols() / G;
  if (grad) *grad = Matrix::Zero(1, pbar.cols());
  double total = 0.0;
  for (int g = 0; g < G; ++g) {
    auto p = pbar.row(0).segment(g * V, V);
    double eh = std::exp(Entropy(p));
    total += (static_cast<double>(V) - eh) / static_cast<double>(V);
    if (grad) {
      // dH/dp_v = -(ln p_v + 1); the floor keeps empty entries finite.
      for (Eigen::Index v = 0; v < V; ++v)
        (*grad)(0, g * V + v) = eh * (std::log(std::max(p(v), 1e-300)) + 1.0) /
                                (static_cast<double>(V) * G);
    }
  }
  return total / G;
}

Var DiversityLossNode(Var pbar, int num_codebooks) {
  Matrix grad;
  double v = DiversityLoss(pbar.value(), num_codebooks, &grad);
  return pbar.tape->Record(Matrix::Constant(1, 1, v), {pbar},
                           [pbar, grad](acoustic::Tape &t, const Matrix &g) {
                             t.AddGrad(pbar, g(0, 0) * grad);
                           });
}

}  // namespace objectives
}  // namespace m2ds2
