// objectives/ctc-loss.cc

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

#include "m2ds2/objectives/ctc-loss.h"

#include <cmath>
#include <limits>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace objectives {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

}  // namespace

int CtcMinimumFrames(const std::vector<int> &target, int blank) {
  int n = static_cast<int>(target.size());
  for (size_t i = 1; i < target.size(); ++i)
    if (target[i] == target[i - 1]) ++n;
  return n;
}

CtcResult CtcLoss(const Matrix &lp, const std::vector<int> &target, int blank) {
  const Eigen::Index T = lp.rows(), K = lp.cols();
  for (int l : target)
    if (l == blank || l < 0 || l >= K) throw DataError("CTC target label out of range");
  if (T < CtcMinimumFrames(target, blank))
    throw DataError("infeasible CTC target: " + std::to_string(target.size()) +
                    " labels need " + std::to_string(CtcMinimumFrames(target, blank)) +
                    " frames, have " + std::to_string(T));
  const Eigen::Index S = 2 * static_cast<Eigen::Index>(target.size()) + 1;
  auto sym = [&](Eigen::Index s) { return s % 2 == 0 ? blank : target[s / 2]; };
  auto can_skip = [&](Eigen::Index s) { return s >= 2 && sym(s) != blank && sym(s) != sym(s - 2); };

  Matrix alpha = Matrix::Constant(T, S, kNegInf), beta = Matrix::Constant(T, S, kNegInf);
  alpha(0, 0) = lp(0, sym(0));
  if (S > 1) alpha(0, 1) = lp(0, sym(1));
  for (Eigen::Index t = 1; t < T; ++t) {
    for (Eigen::Index s = 0; s < S; ++s) {
      double v = alpha(t - 1, s);
      if (s >= 1) v = LogAdd(v, alpha(t - 1, s - 1));
      if (can_skip(s)) v = LogAdd(v, alpha(t - 1, s - 2));
      if (v != kNegInf) alpha(t, s) = v + lp(t, sym(s));
    }
  }
  beta(T - 1, S - 1) = lp(T - 1, sym(S - 1));
  if (S > 1) beta(T - 1, S - 2) = lp(T - 1, sym(S - 2));
  for (Eigen::Index t = T - 2; t >= 0; --t) {
    for (Eigen::Index s = 0; s < S; ++s) {
      double v = beta(t + 1, s);
      if (s + 1 < S) v = LogAdd(v, beta(t + 1, s + 1));
      if (s + 2 < S && can_skip(s + 2)) v = LogAdd(v, beta(t + 1, s + 2));
      if (v != kNegInf) beta(t, s) = v + lp(t, sym(s));
    }
  }
  double log_p = S > 1 ? LogAdd(alpha(T - 1, S - 1), alpha(T - 1, S - 2)) : alpha(T - 1, 0);
  if (log_p == kNegInf) throw NumericError("CTC target has zero probability");

  CtcResult res;
  res.loss = -log_p;
  res.grad = Matrix::Zero(T, K);
  // Both recursions include the emission at t, hence the - lp(t, k).
  for (Eigen::Index t = 0; t < T; ++t) {
    for (Eigen::Index s = 0; s < S; ++s) {
      double g = alpha(t, s) + beta(t, s);
      if (g == kNegInf) continue;
      int k = sym(s);
      res.grad(t, k) -= std::exp(g - lp(t, k) - log_p);
    }
  }
  return res;
}

Var CtcLossNode(Var log_probs, const std::vector<int> &target, int blank) {
  CtcResult r = CtcLoss(log_probs.value(), target, blank);
  Matrix grad = std::move(r.grad);
  return log_probs.tape->Record(Matrix::Constant(1, 1, r.loss), {log_probs},
                                [log_probs, grad](acoustic::Tape &t, const Matrix &g) {
                                  t.AddGrad(log_probs, g(0, 0) * grad);
                                });
}

}  // namespace objectives
}  // namespace m2ds2
