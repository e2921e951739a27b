// corpus/synthetic-corpus.h

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

#ifndef M2DS2_CORPUS_SYNTHETIC_CORPUS_H_
#define M2DS2_CORPUS_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "m2ds2/corpus/dataset.h"

namespace m2ds2 {
namespace corpus {

// A two-domain toy speech task.  Utterances are sentences over a small
// random lexicon; each character is rendered as a few noisy copies of a
// prototype vector, words are separated by silence.  The target domain
// passes the prototypes through a fixed random channel and adds a strong,
// slowly drifting background in extra dimensions the source never excites.
struct SyntheticConfig {
  uint64_t seed = 1;
  int num_chars = 8;
  int lexicon_size = 24;
  int min_word_len = 2, max_word_len = 4;
  int min_words = 2, max_words = 4;
  int content_dim = 12;
  int nuisance_dim = 4;
  int min_char_frames = 2, max_char_frames = 4;
  int gap_frames = 2;
  int edge_frames = 2;
  double source_noise = 0.3;
  double target_noise = 0.3;
  double channel_mix = 0.5;       // 0 = identity channel
  double background_offset = 0.0;  // norm of the fixed target background mean
  double background_scale = 3.0;  // per-utterance offset, target only
  double background_drift = 0.3;  // random-walk step, target only
  double nuisance_noise = 0.0;    // per-frame noise on the extra dims, target
  double source_nuisance_noise = 0.3;  // same, source
  int source_train = 200, source_dev = 40;
  int target_train = 200, target_dev = 40, target_test = 40;
  double frame_seconds = 0.02;

  int input_dim() const { return content_dim + nuisance_dim; }
  void Check() const;
};

struct SyntheticCorpus {
  std::vector<std::string> lexicon;
  Dataset source_train, source_dev;
  Dataset target_train;  // unlabeled
  Dataset target_dev, target_test;
  // Gold transcripts of target_train, in order.
  std::vector<std::string> target_train_gold;
};

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig &cfg);

// Writes feats/<id>.feats and one manifest per split (<split>.jsonl, plus
// target_train_gold.jsonl) under dir.
void WriteSyntheticCorpus(const SyntheticCorpus &corpus, const std::string &dir);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_SYNTHETIC_CORPUS_H_
