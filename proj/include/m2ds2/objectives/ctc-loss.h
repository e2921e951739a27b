// objectives/ctc-loss.h

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

#ifndef M2DS2_OBJECTIVES_CTC_LOSS_H_
#define M2DS2_OBJECTIVES_CTC_LOSS_H_

#include <vector>

#include "m2ds2/acoustic/tape.h"

namespace m2ds2 {
namespace objectives {

using acoustic::Matrix;
using acoustic::Var;

struct CtcResult {
  double loss = 0.0;  // -ln P(target | log_probs)
  Matrix grad;        // d loss / d log_probs, same shape as log_probs
};

// Frames needed to emit target: its length plus one blank between every
// pair of equal neighbours.
int CtcMinimumFrames(const std::vector<int> &target, int blank = 0);

// Forward-backward in log space over log_probs (T x labels).  The gradient
// treats every entry of log_probs as a free input.  Throws DataError when the
// target cannot be emitted in T frames or contains the blank.
CtcResult CtcLoss(const Matrix &log_probs, const std::vector<int> &target, int blank = 0);

// Tape node with value CtcLoss(...).loss.
Var CtcLossNode(Var log_probs, const std::vector<int> &target, int blank = 0);

}  // namespace objectives
}  // namespace m2ds2

#endif  // M2DS2_OBJECTIVES_CTC_LOSS_H_
