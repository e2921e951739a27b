// trainer/trainer.h

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

#ifndef M2DS2_TRAINER_TRAINER_H_
#define M2DS2_TRAINER_TRAINER_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "m2ds2/acoustic/wav2vec-model.h"
#include "m2ds2/corpus/dataset.h"
#include "m2ds2/decoder/char-vocab.h"
#include "m2ds2/objectives/codebook-stats.h"
#include "m2ds2/objectives/mixed-objective.h"
#include "m2ds2/trainer/batching.h"
#include "m2ds2/trainer/optimizer.h"
#include "m2ds2/trainer/train-config.h"

namespace m2ds2 {
namespace trainer {

// Latents computed once by the frozen encoder, plus encoded transcripts
// (empty for unlabeled sets).
struct PreparedSet {
  std::vector<std::string> ids;
  std::vector<acoustic::Matrix> latents;
  std::vector<std::vector<int>> labels;
  size_t size() const { return latents.size(); }
  bool labeled() const { return !labels.empty(); }
};

// Labeled entries whose transcript needs more frames than the latents have
// are dropped with a warning when labeled is set.
PreparedSet Prepare(const acoustic::Wav2VecModel &model, const corpus::Dataset &data,
                    const decoder::CharVocab &vocab, bool labeled);

// Mean per-utterance CTC loss, computed on a snapshot of the weights.
double MeanCtcLoss(const acoustic::Wav2VecModel &model, const PreparedSet &set);
std::vector<std::string> GreedyTranscripts(const acoustic::Wav2VecModel &model,
                                           const std::vector<acoustic::Matrix> &latents,
                                           const decoder::CharVocab &vocab);
// Code usage of the argmax selections pooled over every step of every set.
objectives::CodebookStats PooledCodebookStats(const acoustic::Wav2VecModel &model,
                                              const std::vector<const PreparedSet *> &sets);

struct TrainState {
  long long step = 0;  // optimizer updates applied
  double best_dev_loss = 0.0;
  long long best_step = 0;
  int evals_since_improvement = 0;
  int num_evals = 0;
  bool has_best = false;
  bool stopped = false;  // early stop fired
};

// Mini-batches, randomness and learning rate all follow from (seed, step),
// so a run restored from a checkpoint continues exactly as the
// uninterrupted one.
class Trainer {
 public:
  // labeled: source (SO, M2DS2, CPT finetuning) or silver target (PSL).
  // unlabeled: target audio (M2DS2, CPT pretraining).  dev: labeled source
  // dev set used for early stopping; ignored by CPT pretraining.
  Trainer(TrainMode mode, const TrainConfig &cfg, acoustic::Wav2VecModel model,
          PreparedSet labeled, PreparedSet unlabeled, PreparedSet dev);

  TrainMode mode() const { return mode_; }
  const TrainState &state() const { return state_; }
  const acoustic::Wav2VecModel &model() const { return model_; }
  // Best parameters so far (the current ones before the first evaluation,
  // and always the current ones for CPT pretraining).
  acoustic::Wav2VecModel BestModel() const;
  long long MaxSteps() const;
  bool Done() const { return state_.stopped || state_.step >= MaxSteps(); }

  // Mini-batch index lists for the next update.
  CycleBatches NextBatches() const;
  // One accumulation cycle and one optimizer update.  Throws NumericError
  // on a non-finite loss after writing a dump when a dump path is set.
  objectives::LossComponents Step();
  // Dev CTC evaluation and early-stopping bookkeeping.
  double Evaluate();

  // Runs until max steps or early stop, evaluating every eval_every steps
  // and writing checkpoints there.  out_dir may be empty.
  void Run(const std::string &out_dir);

  void Save(const std::string &path) const;
  void Restore(const std::string &path);

  void set_log(std::vector<nlohmann::json> *log) { log_ = log; }
  void set_dump_path(std::string p) { dump_path_ = std::move(p); }

 private:
  std::vector<objectives::Minibatch> Gather(const std::vector<std::vector<int>> &lists,
                                            const PreparedSet &set, uint64_t first_index) const;

  TrainMode mode_;
  TrainConfig cfg_;
  acoustic::Wav2VecModel model_;
  AdamW adam_;
  PreparedSet labeled_, unlabeled_, dev_;
  TrainState state_;
  std::optional<acoustic::ParameterSet> best_params_;
  std::vector<nlohmann::json> *log_ = nullptr;
  std::string dump_path_;
};

// Greedy silver transcripts for every target utterance; utterances that
// decode to the empty string are dropped.
corpus::Dataset PslGenerate(const acoustic::Wav2VecModel &model, const corpus::Dataset &target,
                            const decoder::CharVocab &vocab);

struct FitData {
  const corpus::Dataset *source_train = nullptr;
  const corpus::Dataset *source_dev = nullptr;
  const corpus::Dataset *target_train = nullptr;
};

struct FitResult {
  acoustic::Wav2VecModel model;  // best checkpoint
  TrainState state;
  std::vector<nlohmann::json> log;
};

// Trains `init` in the given mode.  PSL expects target_train to carry the
// silver transcripts already.  With a nonempty out_dir the log goes to
// train.log.jsonl, checkpoints to last.ckpt and the result to best.ckpt;
// resume continues from last.ckpt when present.  Throws ConfigError when
// the data does not fit the mode.
FitResult Fit(TrainMode mode, const FitData &data, const TrainConfig &cfg,
              const acoustic::Wav2VecModel &init, const decoder::CharVocab &vocab,
              const std::string &out_dir = "", bool resume = false);

}  // namespace trainer
}  // namespace m2ds2

#endif  // M2DS2_TRAINER_TRAINER_H_
