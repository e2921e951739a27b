// ngram/ngram-model.cc

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

#include "m2ds2/ngram/ngram-model.h"

#include <cmath>

#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace ngram {

NGramModel::NGramModel(int order, Vocabulary vocab)
    : order_(order), vocab_(std::move(vocab)), tables_(order) {}

size_t NGramModel::NumEntries() const {
  size_t n = 0;
  for (const auto &t : tables_) n += t.size();
  return n;
}

const NGramEntry *NGramModel::Find(const WordId *begin, size_t len) const {
  if (len == 0 || static_cast<int>(len) > order_) return nullptr;
  NGram key(begin, begin + len);
  const auto &t = tables_[len - 1];
  auto it = t.find(key);
  return it == t.end() ? nullptr : &it->second;
}

double NGramModel::LogProb(const std::vector<WordId> &history, WordId word) const {
  size_t max_ctx = std::min<size_t>(history.size(), order_ - 1);
  // Scratch buffer holding "context word" for the longest context.
  std::vector<WordId> buf(history.end() - max_ctx, history.end());
  buf.push_back(word);
  double backoff = 0.0;
  for (size_t ctx = max_ctx;; --ctx) {
    const WordId *start = buf.data() + (max_ctx - ctx);
    if (const NGramEntry *e = Find(start, ctx + 1)) return backoff + e->log_prob;
    if (ctx == 0) break;
    if (const NGramEntry *h = Find(start, ctx)) backoff += h->log_backoff;
  }
  return backoff + kLogUnkFallback;
}

std::vector<double> NGramModel::ScoreEvents(const std::vector<std::string> &tokens) const {
  std::vector<double> events;
  events.reserve(tokens.size() + 1);
  std::vector<WordId> hist{Vocabulary::kBosId};
  for (const auto &t : tokens) {
    WordId w = vocab_.Lookup(t);
    events.push_back(LogProb(hist, w));
    hist.push_back(w);
  }
  events.push_back(LogProb(hist, Vocabulary::kEosId));
  return events;
}

double NGramModel::Score(const std::vector<std::string> &tokens) const {
  double total = 0.0;
  for (double e : ScoreEvents(tokens)) total += e;
  return total;
}

double NGramModel::ScoreWord(std::vector<WordId> &state, const std::string &word) const {
  WordId w = vocab_.Lookup(word);
  double lp = LogProb(state, w);
  state.push_back(w);
  if (static_cast<int>(state.size()) > std::max(1, order_ - 1))
    state.erase(state.begin(), state.end() - std::max(1, order_ - 1));
  return lp;
}

double NGramModel::ScoreEnd(const std::vector<WordId> &state) const {
  return LogProb(state, Vocabulary::kEosId);
}

double Perplexity(const NGramModel &m, const std::string &line) {
  auto tokens = SplitTokens(line);
  double score = m.Score(tokens);
  return std::pow(10.0, -score / static_cast<double>(tokens.size() + 1));
}

}  // namespace ngram
}  // namespace m2ds2
