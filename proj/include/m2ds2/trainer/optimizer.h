// trainer/optimizer.h

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

#ifndef M2DS2_TRAINER_OPTIMIZER_H_
#define M2DS2_TRAINER_OPTIMIZER_H_

#include "m2ds2/acoustic/checkpoint.h"
#include "m2ds2/acoustic/tape.h"

namespace m2ds2 {
namespace trainer {

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.98;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

// Adam with decoupled weight decay.  Parameters marked non-trainable are
// never touched.
class AdamW {
 public:
  AdamW() = default;
  AdamW(const acoustic::ParameterSet &params, AdamWConfig cfg);

  // One update with learning rate lr.  Parameters whose gradient entry is
  // empty are skipped entirely, weight decay included.
  void Step(acoustic::ParameterSet *params, const acoustic::Gradients &grads, double lr);

  long long steps() const { return t_; }
  void Store(acoustic::Checkpoint *ckpt, const acoustic::ParameterSet &params) const;
  void Restore(const acoustic::Checkpoint &ckpt, const acoustic::ParameterSet &params);

 private:
  AdamWConfig cfg_;
  long long t_ = 0;
  std::vector<acoustic::Matrix> m_, v_;
};

}  // namespace trainer
}  // namespace m2ds2

#endif  // M2DS2_TRAINER_OPTIMIZER_H_
