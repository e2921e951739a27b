// trainer/train-config.h

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

#ifndef M2DS2_TRAINER_TRAIN_CONFIG_H_
#define M2DS2_TRAINER_TRAIN_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "m2ds2/acoustic/wav2vec-model.h"
#include "m2ds2/objectives/mixed-objective.h"
#include "m2ds2/trainer/optimizer.h"

namespace m2ds2 {
namespace trainer {

enum class TrainMode { kSourceOnly, kM2ds2, kCptPretrain, kCptFinetune, kPseudoLabel };
std::string_view TrainModeName(TrainMode m);
TrainMode ParseTrainMode(std::string_view s);

struct TrainConfig {
  double peak_lr = 3e-4;
  long long max_steps = 10000;
  double warmup_fraction = 0.10;
  long long eval_every = 500;
  int patience = 5;
  int source_batch = 4;     // labeled items per M2DS2 cycle
  int target_batch = 8;     // unlabeled items per M2DS2 cycle
  int minibatch_size = 4;   // cycle is split into mini-batches of this size
  int so_batch_size = 8;    // supervised regimes
  int cpt_batch_size = 4;
  long long cpt_steps = 20000;
  double max_grad_norm = 0.0;  // 0 disables clipping
  uint64_t seed = 0;
  AdamWConfig adam;
  objectives::LossWeights weights;
  objectives::SslConfig ssl;

  void Check() const;
  int AccumulationSteps() const { return (source_batch + target_batch) / minibatch_size; }
};

// Default toy-scale architecture for the given input and label counts.
acoustic::ModelConfig DefaultModelConfig(int input_dim, int vocab_size);

// Flat key=value view of both configs ("lr", "alpha", "model.dim", ...).
std::map<std::string, std::string> ConfigToMap(const TrainConfig &t, const acoustic::ModelConfig &m);
// Applies key=value pairs; throws ConfigError on an unknown key or a bad
// value.
void ApplyConfig(const std::map<std::string, std::string> &kv, TrainConfig *t,
                 acoustic::ModelConfig *m);
// "key = value" lines, '#' comments.
std::map<std::string, std::string> ReadConfigFile(const std::string &path);
void WriteConfigFile(const std::map<std::string, std::string> &kv, const std::string &path);

}  // namespace trainer
}  // namespace m2ds2

#endif  // M2DS2_TRAINER_TRAIN_CONFIG_H_
