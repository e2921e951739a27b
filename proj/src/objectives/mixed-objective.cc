// objectives/mixed-objective.cc

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

#include "m2ds2/objectives/mixed-objective.h"

#include <cmath>

#include "m2ds2/base/error.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/objectives/ctc-loss.h"
#include "m2ds2/objectives/diversity-loss.h"

namespace m2ds2 {
namespace objectives {

using acoustic::Gradients;
using acoustic::Tape;

void LossWeights::Check() const {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(diversity_weight >= 0.0))
    throw ConfigError("loss weights must be nonnegative");
}

std::optional<std::pair<Var, SslTerms>> SelfSupervisedLoss(Tape &tape,
                                                           const acoustic::Wav2VecModel &model,
                                                           const Minibatch &mb,
                                                           const SslConfig &cfg,
                                                           double diversity_weight,
                                                           double temperature) {
  Rng gumbel(DeriveSeed(mb.seed, {2}));
  Rng distract(DeriveSeed(mb.seed, {3}));
  std::vector<Var> ctx_rows, tgt_rows, probs;
  std::vector<std::vector<int>> distractors;
  SslTerms terms;
  for (size_t u = 0; u < mb.latents.size(); ++u) {
    const Matrix &z = mb.latents[u];
    auto mask = acoustic::SampleMask(static_cast<int>(z.rows()), cfg.mask_prob, cfg.mask_span,
                                     DeriveSeed(mb.seed, {1, u}));
    std::vector<int> masked;
    for (size_t t = 0; t < mask.size(); ++t)
      if (mask[t]) masked.push_back(static_cast<int>(t));
    auto fwd = model.ForwardSsl(tape, z, mask, cfg.quantize_mode, temperature, &gumbel);
    probs.push_back(fwd.quant.probs);
    if (masked.size() < 2) continue;
    auto ds = SampleDistractors(static_cast<int>(masked.size()), cfg.num_distractors, &distract);
    // Distractor indices are offset into the pooled target rows.
    int offset = terms.masked_steps;
    for (auto &d : ds) {
      for (int &i : d) i += offset;
      distractors.push_back(std::move(d));
    }
    ctx_rows.push_back(acoustic::GatherRows(fwd.context, masked));
    tgt_rows.push_back(acoustic::GatherRows(fwd.quant.q, masked));
    terms.masked_steps += static_cast<int>(masked.size());
  }
  if (ctx_rows.empty()) return std::nullopt;
  const auto &qc = model.config().quantizer;
  Var contrastive = ContrastiveLossNode(acoustic::ConcatRows(ctx_rows), acoustic::ConcatRows(tgt_rows),
                                        distractors, qc.kappa);
  Var pbar = acoustic::MeanRows(acoustic::ConcatRows(probs));
  Var diversity = DiversityLossNode(pbar, qc.num_codebooks);
  terms.contrastive = contrastive.value()(0, 0);
  terms.diversity = diversity.value()(0, 0);
  terms.diversity_per_codebook = DiversityPerCodebook(pbar.value(), qc.num_codebooks);
  Var per_step = diversity_weight != 0.0
                     ? acoustic::Add(contrastive, acoustic::Scale(diversity, diversity_weight))
                     : contrastive;
  // Summed over the masked steps of the mini-batch, which keeps alpha and
  // beta on the scale of a per-utterance CTC loss.
  Var loss = acoustic::Scale(per_step, static_cast<double>(terms.masked_steps));
  terms.loss = loss.value()(0, 0);
  return std::make_pair(loss, terms);
}

Var CtcBatchLoss(Tape &tape, const acoustic::Wav2VecModel &model, const Minibatch &mb) {
  if (!mb.labeled() || mb.labels.size() != mb.latents.size())
    throw DataError("CTC needs one transcript per utterance");
  std::vector<Var> losses;
  for (size_t u = 0; u < mb.latents.size(); ++u)
    losses.push_back(CtcLossNode(model.CtcLogProbs(tape, mb.latents[u]), mb.labels[u]));
  Var sum = losses.size() == 1 ? losses[0] : acoustic::Sum(acoustic::ConcatRows(losses));
  return acoustic::Scale(sum, 1.0 / static_cast<double>(losses.size()));
}

namespace {

struct BatchResult {
  std::optional<double> ctc, ss;
  std::vector<double> diversity;
  double weighted = 0.0;
  Gradients grads;
};

BatchResult EvaluateBatch(const acoustic::Wav2VecModel &model, const Minibatch &mb, bool with_ctc,
                          double ss_weight, const LossWeights &w, const SslConfig &ssl,
                          double temperature, bool want_grads) {
  BatchResult r;
  Tape tape(&model.params());
  std::optional<Var> total;
  if (with_ctc) {
    Var ctc = CtcBatchLoss(tape, model, mb);
    r.ctc = ctc.value()(0, 0);
    total = ctc;
  }
  if (ss_weight != 0.0) {
    auto ss = SelfSupervisedLoss(tape, model, mb, ssl, w.diversity_weight, temperature);
    if (ss) {
      r.ss = ss->second.loss;
      r.diversity = ss->second.diversity_per_codebook;
      Var scaled = acoustic::Scale(ss->first, ss_weight);
      total = total ? acoustic::Add(*total, scaled) : scaled;
    }
  }
  if (!total) return r;
  r.weighted = total->value()(0, 0);
  if (!std::isfinite(r.weighted)) throw NumericError("non-finite mini-batch loss");
  if (want_grads) tape.Backward(*total, &r.grads);
  return r;
}

}  // namespace

LossComponents MixedLoss(const acoustic::Wav2VecModel &model, const std::vector<Minibatch> &source,
                         const std::vector<Minibatch> &target, const LossWeights &weights,
                         const SslConfig &ssl, double temperature, bool source_ctc,
                         Gradients *grads) {
  weights.Check();
  const size_t ns = source.size(), n = source.size() + target.size();
  std::vector<BatchResult> results(n);
  ParallelFor(n, [&](size_t i) {
    bool is_src = i < ns;
    const Minibatch &mb = is_src ? source[i] : target[i - ns];
    results[i] = EvaluateBatch(model, mb, is_src && source_ctc, is_src ? weights.alpha : weights.beta,
                               weights, ssl, temperature, grads != nullptr);
  });
  LossComponents c;
  for (size_t i = 0; i < n; ++i) {
    BatchResult &r = results[i];
    bool is_src = i < ns;
    if (r.ctc) c.ctc = c.ctc.value_or(0.0) + *r.ctc;
    if (r.ss) {
      auto &slot = is_src ? c.ss_src : c.ss_tgt;
      slot = slot.value_or(0.0) + *r.ss;
      (is_src ? c.diversity_src : c.diversity_tgt) = r.diversity;
    }
    c.total += r.weighted;
    if (grads && r.grads.size() > 0) grads->Add(r.grads);
  }
  return c;
}

}  // namespace objectives
}  // namespace m2ds2
