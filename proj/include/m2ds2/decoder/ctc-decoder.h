// decoder/ctc-decoder.h

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

#ifndef M2DS2_DECODER_CTC_DECODER_H_
#define M2DS2_DECODER_CTC_DECODER_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "m2ds2/decoder/char-vocab.h"
#include "m2ds2/ngram/ngram-model.h"

namespace m2ds2 {
namespace decoder {

struct DecodeConfig {
  int beam_width = 13;
  double lm_weight = 0.5;
  double word_bonus = 0.0;
  void Check() const;
};

// All scores are natural logs; LM log10 values are converted on the way in.
struct Hypothesis {
  std::vector<int> labels;  // collapsed label sequence
  std::string text;
  double acoustic = 0.0;
  double lm = 0.0;
  int num_words = 0;
  double combined = 0.0;
  // Set when every prefix had zero probability.
  bool underflow = false;
};

// Per-frame argmax, collapse repeats, drop blanks.  log_probs is T x |vocab|.
std::vector<int> GreedyLabels(const Eigen::MatrixXd &log_probs);
std::string GreedyDecode(const Eigen::MatrixXd &log_probs, const CharVocab &vocab);

// Words of a collapsed label sequence, split at delimiters.
std::vector<std::string> LabelWords(const std::vector<int> &labels, const CharVocab &vocab);

// LM contribution (natural log) of the words of a full hypothesis, including
// the end-of-sentence event.  0 when lm is null.
double WordSequenceLmScore(const std::vector<std::string> &words, const ngram::NGramModel *lm);

// Prefix beam search with word-level shallow fusion.  lm may be null.
Hypothesis BeamDecode(const Eigen::MatrixXd &log_probs, const CharVocab &vocab,
                      const ngram::NGramModel *lm, const DecodeConfig &cfg = DecodeConfig());

// Scores a fixed label sequence under the same combination BeamDecode uses.
// The acoustic part is the CTC log marginal of the sequence.
Hypothesis ScoreLabels(const Eigen::MatrixXd &log_probs, const std::vector<int> &labels,
                       const CharVocab &vocab, const ngram::NGramModel *lm,
                       const DecodeConfig &cfg = DecodeConfig());

}  // namespace decoder
}  // namespace m2ds2

#endif  // M2DS2_DECODER_CTC_DECODER_H_
