// objectives/contrastive-loss.h

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

#ifndef M2DS2_OBJECTIVES_CONTRASTIVE_LOSS_H_
#define M2DS2_OBJECTIVES_CONTRASTIVE_LOSS_H_

#include <vector>

#include "m2ds2/acoustic/tape.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace objectives {

using acoustic::Matrix;
using acoustic::Var;

constexpr int kDefaultNumDistractors = 10;

// For each of M masked steps, k distinct other steps drawn uniformly.  k is
// min(K, M - 1); a warning is logged when it had to shrink.  Empty when
// M < 2.
std::vector<std::vector<int>> SampleDistractors(int num_masked, int K, Rng *rng);

// -ln softmax of the true candidate among {true} + distractors, with
// similarities cos / kappa.
double ContrastiveFromCosines(double true_cos, const std::vector<double> &distractor_cos,
                              double kappa);

// Mean over rows m of the contrastive term for context[m] against targets[m]
// and the distractor rows targets[d], d in distractors[m].  Rows without
// distractors are skipped; Throws ConfigError if none remain.
double ContrastiveLoss(const Matrix &context, const Matrix &targets,
                       const std::vector<std::vector<int>> &distractors, double kappa,
                       Matrix *grad_context = nullptr, Matrix *grad_targets = nullptr);

// Tape node for ContrastiveLoss; gradients flow into both inputs.
Var ContrastiveLossNode(Var context, Var targets, const std::vector<std::vector<int>> &distractors,
                        double kappa);

}  // namespace objectives
}  // namespace m2ds2

#endif  // M2DS2_OBJECTIVES_CONTRASTIVE_LOSS_H_
