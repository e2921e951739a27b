// objectives/mixed-objective.h

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

#ifndef M2DS2_OBJECTIVES_MIXED_OBJECTIVE_H_
#define M2DS2_OBJECTIVES_MIXED_OBJECTIVE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "m2ds2/acoustic/mask-sampler.h"
#include "m2ds2/acoustic/wav2vec-model.h"
#include "m2ds2/objectives/contrastive-loss.h"

namespace m2ds2 {
namespace objectives {

struct LossWeights {
  double alpha = 0.01;             // source self-supervision
  double beta = 0.02;              // target self-supervision
  double diversity_weight = 0.1;   // inside the self-supervised loss
  void Check() const;
};

struct SslConfig {
  double mask_prob = acoustic::kDefaultMaskProb;
  int mask_span = acoustic::kDefaultMaskSpan;
  int num_distractors = kDefaultNumDistractors;
  acoustic::QuantizeMode quantize_mode = acoustic::QuantizeMode::kHard;
};

// One single-domain mini-batch.  labels is empty for unlabeled data,
// otherwise it has one target per utterance.
struct Minibatch {
  std::vector<Matrix> latents;
  std::vector<std::vector<int>> labels;
  // Masks, Gumbel noise and distractors all derive from this seed.
  uint64_t seed = 0;
  bool labeled() const { return !labels.empty(); }
};

struct SslTerms {
  double loss = 0.0;         // masked_steps * (contrastive + diversity_weight * diversity)
  double contrastive = 0.0;
  double diversity = 0.0;
  std::vector<double> diversity_per_codebook;
  int masked_steps = 0;
};

// Self-supervised loss of one mini-batch on the tape: the mean contrastive
// term plus the weighted diversity term, times the number of masked steps.
// Utterances with fewer than 2 masked steps add no contrastive term; nullopt
// when no utterance qualifies.
std::optional<std::pair<Var, SslTerms>> SelfSupervisedLoss(acoustic::Tape &tape,
                                                           const acoustic::Wav2VecModel &model,
                                                           const Minibatch &mb,
                                                           const SslConfig &cfg,
                                                           double diversity_weight,
                                                           double temperature);

// Mean CTC loss over the utterances of a labeled mini-batch (unmasked).
Var CtcBatchLoss(acoustic::Tape &tape, const acoustic::Wav2VecModel &model, const Minibatch &mb);

// Loss components of one accumulation cycle.  Absent values were not
// computed because their weight was zero or there was no such data.
struct LossComponents {
  std::optional<double> ctc;
  std::optional<double> ss_src;
  std::optional<double> ss_tgt;
  std::vector<double> diversity_src, diversity_tgt;  // per codebook, last batch
  double total = 0.0;
};

// total = ctc + alpha * ss_src + beta * ss_tgt, where ctc and ss_src come
// from the source mini-batches and ss_tgt sums L_s over the target
// mini-batches.  Terms whose weight is exactly zero are skipped.  When grads
// is non-null the gradient of total is added to it.  Mini-batches are
// evaluated concurrently and reduced in a fixed order.
LossComponents MixedLoss(const acoustic::Wav2VecModel &model, const std::vector<Minibatch> &source,
                         const std::vector<Minibatch> &target, const LossWeights &weights,
                         const SslConfig &ssl, double temperature, bool source_ctc,
                         acoustic::Gradients *grads);

}  // namespace objectives
}  // namespace m2ds2

#endif  // M2DS2_OBJECTIVES_MIXED_OBJECTIVE_H_
