// tests/acceptance/training-criteria.cc

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

// Training criteria: the accumulated mixed objective, the frozen feature
// encoder, and the adaptation experiments on the synthetic corpus.

#include <cmath>
#include <functional>

#include "acceptance/acceptance.h"
#include "common/oracles.h"
#include "common/toy-model.h"
#include "m2ds2/base/random.h"
#include "m2ds2/corpus/manifest-ops.h"
#include "m2ds2/corpus/synthetic-corpus.h"
#include "m2ds2/metrics/wer.h"
#include "m2ds2/trainer/trainer.h"

namespace m2ds2 {
namespace acceptance {
namespace {

using acoustic::Var;
using acoustic::Wav2VecModel;

// 9 ------------------------------------------------------------------------

Eigen::VectorXd Flatten(const acoustic::Gradients &g) {
  long long n = 0;
  for (size_t i = 0; i < g.size(); ++i) n += g[i].size();
  Eigen::VectorXd v(n);
  long long k = 0;
  for (size_t i = 0; i < g.size(); ++i)
    for (Eigen::Index j = 0; j < g[i].size(); ++j) v(k++) = g[i].data()[j];
  return v;
}

// The whole cycle recorded on one tape and differentiated once.
double SingleTapeLoss(const Wav2VecModel &model, const objectives::Minibatch &src,
                      const std::vector<objectives::Minibatch> &tgt, const objectives::LossWeights &w,
                      const objectives::SslConfig &ssl, double temperature, acoustic::Gradients *grads) {
  acoustic::Tape tape(&model.params());
  Var total = objectives::CtcBatchLoss(tape, model, src);
  if (auto s = objectives::SelfSupervisedLoss(tape, model, src, ssl, w.diversity_weight, temperature))
    total = acoustic::Add(total, acoustic::Scale(s->first, w.alpha));
  for (const auto &mb : tgt)
    if (auto s = objectives::SelfSupervisedLoss(tape, model, mb, ssl, w.diversity_weight, temperature))
      total = acoustic::Add(total, acoustic::Scale(s->first, w.beta));
  tape.Backward(total, grads);
  return tape.Value(total)(0, 0);
}

Outcome AccumulationAndFrozenEncoder() {
  // One M2DS2 cycle holds a 4-utterance source mini-batch and two
  // 4-utterance target mini-batches.
  trainer::TrainConfig tc;
  const bool layout = tc.source_batch == 4 && tc.target_batch == 8 && tc.minibatch_size == 4 &&
                      tc.AccumulationSteps() == 3;
  double worst_loss = 0.0, worst_grad = 0.0;
  for (int k = 0; k < 5; ++k) {
    Wav2VecModel model(testing::ToyModelConfig(), 900 + k);
    objectives::SslConfig ssl;
    ssl.mask_prob = 0.3;
    ssl.mask_span = 4;
    objectives::LossWeights w;
    w.alpha = 0.5;
    w.beta = 0.7;
    auto src = testing::ToyMinibatch(model, 4, true, 910 + k);
    std::vector<objectives::Minibatch> tgt{testing::ToyMinibatch(model, 4, false, 920 + k),
                                           testing::ToyMinibatch(model, 4, false, 930 + k)};
    acoustic::Gradients ga, gb;
    double a = SingleTapeLoss(model, src, tgt, w, ssl, 1.5, &ga);
    double b = objectives::MixedLoss(model, {src}, tgt, w, ssl, 1.5, true, &gb).total;
    worst_loss = std::max(worst_loss, std::abs(a - b) / std::abs(a));
    worst_grad = std::max(worst_grad, testing::RelativeError(Flatten(ga), Flatten(gb)));
  }

  // Raw-audio model: the convolutional feature encoder must not move.
  acoustic::ModelConfig mc = testing::ToyModelConfig();
  mc.encoder.synthetic_feature_mode = false;
  mc.encoder.conv_layers = {{4, 4, 2}, {4, 3, 2}};
  Wav2VecModel init(mc, 950);
  Rng rng(951);
  auto make_set = [&](int n, bool labeled) {
    trainer::PreparedSet s;
    for (int i = 0; i < n; ++i) {
      acoustic::Matrix audio(160 + 8 * static_cast<int>(UniformIndex(rng, 5)), 1);
      for (Eigen::Index j = 0; j < audio.rows(); ++j) audio(j, 0) = StandardNormal(rng);
      s.ids.push_back("u" + std::to_string(i));
      s.latents.push_back(init.Latents(audio));
      if (labeled) s.labels.push_back({3, 4, 5});
    }
    return s;
  };
  trainer::TrainConfig cfg;
  cfg.peak_lr = 2e-3;
  cfg.max_steps = 100;
  cfg.eval_every = 50;
  trainer::Trainer t(trainer::TrainMode::kM2ds2, cfg, init, make_set(12, true), make_set(16, false),
                     make_set(4, true));
  t.Run("");
  int frozen = 0, frozen_moved = 0, trainable = 0, trainable_still = 0;
  const auto &before = init.params(), &after = t.model().params();
  for (size_t i = 0; i < before.size(); ++i) {
    if (before[i].name.rfind("fe.", 0) == 0) {
      ++frozen;
      if (after[i].trainable || after[i].value != before[i].value) ++frozen_moved;
    } else if (before[i].trainable) {
      ++trainable;
      if (after[i].value == before[i].value) ++trainable_still;
    }
  }
  bool ok = layout && worst_loss <= 1e-6 && worst_grad <= 1e-6 && t.state().step == 100 && frozen > 0 &&
            frozen_moved == 0 && trainable_still == 0;
  return {ok, Cat("cycle [S4][T4][T4]: max rel err loss ", worst_loss, ", gradient ", worst_grad,
                  " (tol 1e-6); after ", t.state().step, " steps ", frozen_moved, "/", frozen,
                  " feature-encoder tensors moved, ", trainable_still, "/", trainable,
                  " trainable tensors unchanged")};
}

// 10, 11 -------------------------------------------------------------------

// The synthetic task used for the adaptation experiments: a strong target
// background offset the source never shows.
corpus::SyntheticConfig ExperimentCorpus(uint64_t seed) {
  corpus::SyntheticConfig sc;
  sc.seed = seed;
  sc.source_train = 1000;
  sc.target_dev = 150;
  sc.background_scale = 1.0;
  sc.background_drift = 0.05;
  sc.background_offset = 2.0;
  sc.channel_mix = 0.0;
  return sc;
}

constexpr int kSeeds = 5;
constexpr long long kExperimentSteps = 1000;

struct RunResult {
  double target_wer = 0.0;
  double usage = 0.0;  // mean effective code usage, source + target dev
};

enum class Variant { kSourceOnly, kM2ds2, kNoSourceSsl, kQuarterTarget };

RunResult RunExperiment(Variant v, uint64_t seed) {
  corpus::SyntheticConfig sc = ExperimentCorpus(seed);
  corpus::SyntheticCorpus corp = corpus::GenerateSyntheticCorpus(sc);
  std::vector<std::string> texts, refs;
  for (const auto &u : corp.source_train.manifest.entries()) texts.push_back(*u.transcript);
  for (const auto &u : corp.target_dev.manifest.entries()) refs.push_back(*u.transcript);
  decoder::CharVocab vocab = decoder::CharVocab::FromTranscripts(texts);

  trainer::TrainConfig tc;
  tc.seed = seed;
  acoustic::ModelConfig mc = trainer::DefaultModelConfig(sc.input_dim(), vocab.size());
  trainer::ApplyConfig({{"max_steps", std::to_string(kExperimentSteps)},
                        {"eval_every", "100"},
                        {"lr", "2e-3"},
                        {"model.layers", "1"},
                        {"model.dim", "32"},
                        {"model.ffn_dim", "64"}},
                       &tc, &mc);
  if (v == Variant::kNoSourceSsl) tc.weights.alpha = 0.0;
  Wav2VecModel init(mc, tc.seed);

  corpus::Dataset quarter =
      corp.target_train.Select(corpus::SubsetFraction(corp.target_train.manifest, 0.25, seed));
  trainer::FitData data{&corp.source_train, &corp.source_dev,
                        v == Variant::kQuarterTarget ? &quarter : &corp.target_train};
  auto mode = v == Variant::kSourceOnly ? trainer::TrainMode::kSourceOnly : trainer::TrainMode::kM2ds2;
  trainer::FitResult fit = trainer::Fit(mode, data, tc, init, vocab);

  auto src_dev = trainer::Prepare(fit.model, corp.source_dev, vocab, false);
  auto tgt_dev = trainer::Prepare(fit.model, corp.target_dev, vocab, false);
  RunResult r;
  r.target_wer = metrics::ComputeWer(refs, trainer::GreedyTranscripts(fit.model, tgt_dev.latents, vocab)).wer;
  r.usage = trainer::PooledCodebookStats(fit.model, {&src_dev, &tgt_dev}).MeanEffectiveUsage();
  return r;
}

Outcome CodebookCollapse() {
  int wins = 0;
  std::string per_seed;
  for (uint64_t seed = 1; seed <= kSeeds; ++seed) {
    RunResult full = RunExperiment(Variant::kM2ds2, seed);
    RunResult no_src = RunExperiment(Variant::kNoSourceSsl, seed);
    if (no_src.usage < full.usage) ++wins;
    per_seed += Cat(seed == 1 ? "" : ", ", no_src.usage, " vs ", full.usage);
  }
  return {wins >= 4, Cat("usage with alpha=0 below full M2DS2 in ", wins, "/", kSeeds,
                         " seeds (need 4): ", per_seed)};
}

Outcome AdaptationHelps() {
  int full_wins = 0, quarter_wins = 0;
  std::string per_seed;
  for (uint64_t seed = 1; seed <= kSeeds; ++seed) {
    RunResult so = RunExperiment(Variant::kSourceOnly, seed);
    RunResult full = RunExperiment(Variant::kM2ds2, seed);
    RunResult quarter = RunExperiment(Variant::kQuarterTarget, seed);
    if (full.target_wer <= so.target_wer) ++full_wins;
    if (quarter.target_wer <= so.target_wer) ++quarter_wins;
    per_seed += Cat(seed == 1 ? "" : "; ", "SO ", so.target_wer, " M2DS2 ", full.target_wer, " 25% ",
                    quarter.target_wer);
  }
  return {full_wins >= 4 && quarter_wins >= 3,
          Cat("target WER at or below source-only: M2DS2 ", full_wins, "/", kSeeds, " (need 4), 25% target ",
              quarter_wins, "/", kSeeds, " (need 3); ", per_seed)};
}

}  // namespace

void AddTrainingCriteria(std::vector<Criterion> *out) {
  out->push_back({9, "mixed objective accumulates as one loss; feature encoder stays frozen",
                  AccumulationAndFrozenEncoder});
  out->push_back({10, "source self-supervision prevents codebook collapse", CodebookCollapse});
  out->push_back({11, "M2DS2 improves target WER over source-only", AdaptationHelps});
}

}  // namespace acceptance
}  // namespace m2ds2
