// objectives/diversity-loss.h

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

#ifndef M2DS2_OBJECTIVES_DIVERSITY_LOSS_H_
#define M2DS2_OBJECTIVES_DIVERSITY_LOSS_H_

#include <vector>

#include "m2ds2/acoustic/tape.h"

namespace m2ds2 {
namespace objectives {

using acoustic::Matrix;
using acoustic::Var;

// Entropy in nats; zero-probability entries contribute nothing.
double Entropy(const Eigen::Ref<const Eigen::RowVectorXd> &p);

// (1/G) sum_g (V - exp(H(pbar_g))) / V for pbar laid out as G blocks of V
// entries in one row.  Zero iff every block is uniform.
double DiversityLoss(const Matrix &pbar, int num_codebooks, Matrix *grad = nullptr);

// Per-codebook terms (V - exp H) / V, for logging.
std::vector<double> DiversityPerCodebook(const Matrix &pbar, int num_codebooks);

Var DiversityLossNode(Var pbar, int num_codebooks);

}  // namespace objectives
}  // namespace m2ds2

#endif  // M2DS2_OBJECTIVES_DIVERSITY_LOSS_H_
