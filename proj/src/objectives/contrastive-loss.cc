// objectives/contrastive-loss.cc

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

#include "m2ds2/objectives/contrastive-loss.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"

namespace m2ds2 {
namespace objectives {

std::vector<std::vector<int>> SampleDistractors(int num_masked, int K, Rng *rng) {
  if (K < 1) throw ConfigError("need at least one distractor");
  std::vector<std::vector<int>> out;
  if (num_masked < 2) return out;
  int k = std::min(K, num_masked - 1);
  if (k < K)
    M2DS2_VLOG(1) << "only " << num_masked << " masked steps, using " << k << " distractors";
  out.resize(num_masked);
  std::vector<int> pool(num_masked - 1);
  for (int m = 0; m < num_masked; ++m) {
    // Partial Fisher-Yates over the other steps.
    for (int i = 0, v = 0; v < num_masked; ++v)
      if (v != m) pool[i++] = v;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(UniformIndex(*rng, static_cast<uint64_t>(pool.size() - i)));
      std::swap(pool[i], pool[j]);
    }
    out[m].assign(pool.begin(), pool.begin() + k);
  }
  return out;
}

double ContrastiveFromCosines(double true_cos, const std::vector<double> &distractor_cos,
                              double kappa) {
  double s0 = true_cos / kappa, m = s0;
  for (double c : distractor_cos) m = std::max(m, c / kappa);
  double z = std::exp(s0 - m);
  for (double c : distractor_cos) z += std::exp(c / kappa - m);
  return -(s0 - m - std::log(z));
}

double ContrastiveLoss(const Matrix &context, const Matrix &targets,
                       const std::vector<std::vector<int>> &distractors, double kappa,
                       Matrix *grad_context, Matrix *grad_targets) {
  const Eigen::Index M = context.rows();
  if (targets.rows() != M || targets.cols() != context.cols() ||
      static_cast<Eigen::Index>(distractors.size()) != M)
    throw ConfigError("contrastive inputs disagree in shape");
  Eigen::VectorXd cn = context.rowwise().norm(), tn = targets.rowwise().norm();
  const double eps = 1e-12;
  if (grad_context) *grad_context = Matrix::Zero(M, context.cols());
  if (grad_targets) *grad_targets = Matrix::Zero(M, targets.cols());
  double total = 0.0;
  int used = 0;
  for (Eigen::Index m = 0; m < M; ++m)
    if (!distractors[m].empty()) ++used;
  if (used == 0) throw ConfigError("no masked step has distractors");

  for (Eigen::Index m = 0; m < M; ++m) {
    const auto &ds = distractors[m];
    if (ds.empty()) continue;
    std::vector<int> cand(1, static_cast<int>(m));
    cand.insert(cand.end(), ds.begin(), ds.end());
    std::vector<double> cos(cand.size()), s(cand.size());
    double a = std::max(cn(m), eps);
    for (size_t k = 0; k < cand.size(); ++k) {
      double b = std::max(tn(cand[k]), eps);
      cos[k] = context.row(m).dot(targets.row(cand[k])) / (a * b);
      s[k] = cos[k] / kappa;
    }
    double mx = *std::max_element(s.begin(), s.end()), z = 0.0;
    for (double v : s) z += std::exp(v - mx);
    total += -(s[0] - mx - std::log(z));
    if (!grad_context && !grad_targets) continue;
    // d/ds_k = softmax_k - [k == 0], scaled by the mean.
    for (size_t k = 0; k < cand.size(); ++k) {
      double ds_k = (std::exp(s[k] - mx) / z - (k == 0 ? 1.0 : 0.0)) / (kappa * used);
      const int j = cand[k];
      double b = std::max(tn(j), eps);
      if (grad_context)
        grad_context->row(m) +=
            ds_k * (targets.row(j) / (a * b) - cos[k] * context.row(m) / (a * a));
      if (grad_targets)
        grad_targets->row(j) +=
            ds_k * (context.row(m) / (a * b) - cos[k] * targets.row(j) / (b * b));
    }
  }
  return total / used;
}

Var ContrastiveLossNode(Var context, Var targets, const std::vector<std::vector<int>> &distractors,
                        double kappa) {
  Matrix gc, gt;
  double v = ContrastiveLoss(context.value(), targets.value(), distractors, kappa, &gc, &gt);
  return context.tape->Record(Matrix::Constant(1, 1, v), {context, targets},
                              [context, targets, gc, gt](acoustic::Tape &t, const Matrix &g) {
                                t.AddGrad(context, g(0, 0) * gc);
                                t.AddGrad(targets, g(0, 0) * gt);
                              });
}

}  // namespace objectives
}  // namespace m2ds2
