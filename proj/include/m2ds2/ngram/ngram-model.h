// ngram/ngram-model.h

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

#ifndef M2DS2_NGRAM_NGRAM_MODEL_H_
#define M2DS2_NGRAM_NGRAM_MODEL_H_

#include <string>
#include <vector>

#include "m2ds2/ngram/ngram-counts.h"

namespace m2ds2 {
namespace ngram {

// log10 probability assigned to <s> (never predicted) and to words missing
// from a model that has no <unk> entry.
inline constexpr double kLogZero = -99.0;
inline constexpr double kLogUnkFallback = -100.0;

struct NGramEntry {
  double log_prob = 0.0;     // log10 P(w | h)
  double log_backoff = 0.0;  // log10 backoff weight when used as a history
};

// Backoff language model.  Immutable once built; safe for concurrent reads.
class NGramModel {
 public:
  NGramModel() = default;
  NGramModel(int order, Vocabulary vocab);

  int order() const { return order_; }
  const Vocabulary &vocab() const { return vocab_; }
  Vocabulary &mutable_vocab() { return vocab_; }
  const NGramMap<NGramEntry> &table(int n) const { return tables_[n - 1]; }
  NGramMap<NGramEntry> &mutable_table(int n) { return tables_[n - 1]; }
  size_t NumEntries() const;

  // log10 P(word | history) by the usual backoff recursion; history may be
  // longer than order - 1 (only the tail is used).
  double LogProb(const std::vector<WordId> &history, WordId word) const;

  // Total log10 probability of "<s> tokens </s>" (the return value counts
  // tokens.size() + 1 predicted events).  Unknown words map to <unk>.
  double Score(const std::vector<std::string> &tokens) const;
  // Per-event log10 probabilities of the same sequence.
  std::vector<double> ScoreEvents(const std::vector<std::string> &tokens) const;

  // Word-level scoring state for decoders: the last order-1 words.
  std::vector<WordId> BeginState() const { return {Vocabulary::kBosId}; }
  double ScoreWord(std::vector<WordId> &state, const std::string &word) const;
  double ScoreEnd(const std::vector<WordId> &state) const;

 private:
  const NGramEntry *Find(const WordId *begin, size_t len) const;

  int order_ = 0;
  Vocabulary vocab_;
  std::vector<NGramMap<NGramEntry>> tables_;
};

// 10^(-score / N) with N = number of tokens + 1 (the end marker).
double Perplexity(const NGramModel &m, const std::string &line);

struct ScoredLine {
  std::string text;
  double perplexity = 1.0;
};

}  // namespace ngram
}  // namespace m2ds2

#endif  // M2DS2_NGRAM_NGRAM_MODEL_H_
