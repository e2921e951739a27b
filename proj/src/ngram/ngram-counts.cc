// ngram/ngram-counts.cc

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

#include "m2ds2/ngram/ngram-counts.h"

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace ngram {

Vocabulary::Vocabulary() {
  Intern(kBos);
  Intern(kEos);
  Intern(kUnk);
}

WordId Vocabulary::Intern(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  WordId id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

WordId Vocabulary::Lookup(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

bool Vocabulary::Contains(std::string_view word) const {
  return ids_.count(std::string(word)) > 0;
}

int64_t NGramCounts::Count(const std::vector<std::string> &words) const {
  if (words.empty() || static_cast<int>(words.size()) > order) return 0;
  NGram g;
  for (const auto &w : words) {
    if (!vocab.Contains(w)) return 0;
    g.push_back(vocab.Lookup(w));
  }
  const auto &table = counts[words.size() - 1];
  auto it = table.find(g);
  return it == table.end() ? 0 : it->second;
}

NGramCounts CountNGrams(const std::vector<std::string> &lines, int order) {
  if (order < 1) throw ConfigError("n-gram order must be >= 1");
  NGramCounts c;
  c.order = order;
  c.counts.resize(order);
  c.left_extensions.resize(order);
  size_t used = 0;
  for (const auto &line : lines) {
    std::vector<WordId> seq{Vocabulary::kBosId};
    for (const auto &tok : SplitTokens(line)) seq.push_back(c.vocab.Intern(tok));
    seq.push_back(Vocabulary::kEosId);
    ++used;
    for (size_t end = 1; end < seq.size(); ++end) {
      for (int n = 1; n <= order && static_cast<size_t>(n) <= end + 1; ++n) {
        size_t begin = end + 1 - n;
        // <s> may only open an n-gram, and is never a unigram on its own.
        if (begin == 0 && n == 1) continue;
        NGram g(seq.begin() + begin, seq.begin() + end + 1);
        c.counts[n - 1][g] += 1;
      }
    }
  }
  if (used == 0) throw DataError("cannot count n-grams of an empty corpus");

  // Continuation counts: number of distinct words preceding each n-gram.
  for (int n = 2; n <= order; ++n) {
    for (const auto &kv : c.counts[n - 1]) {
      NGram suffix(kv.first.begin() + 1, kv.first.end());
      c.left_extensions[n - 2][suffix] += 1;
    }
  }
  return c;
}

std::map<int, int64_t> DefaultPruneThresholds() { return {{2, 3}, {3, 5}, {4, 7}}; }

NGramCounts PruneCounts(const NGramCounts &c, const std::map<int, int64_t> &min_count) {
  NGramCounts out;
  out.order = c.order;
  out.vocab = c.vocab;
  out.counts.resize(c.order);
  out.left_extensions.resize(c.order);
  out.counts[0] = c.counts[0];
  out.left_extensions[0] = c.left_extensions[0];
  for (int n = 2; n <= c.order; ++n) {
    auto thr_it = min_count.find(n);
    int64_t thr = thr_it == min_count.end() ? 0 : thr_it->second;
    const auto &lower = out.counts[n - 2];
    for (const auto &kv : c.counts[n - 1]) {
      if (kv.second < thr) continue;
      if (n > 2) {
        NGram prefix(kv.first.begin(), kv.first.end() - 1);
        NGram suffix(kv.first.begin() + 1, kv.first.end());
        if (!lower.count(prefix) || !lower.count(suffix)) continue;
      }
      out.counts[n - 1].emplace(kv.first, kv.second);
      auto le = c.left_extensions[n - 1].find(kv.first);
      if (le != c.left_extensions[n - 1].end())
        out.left_extensions[n - 1].emplace(le->first, le->second);
    }
  }
  return out;
}

}  // namespace ngram
}  // namespace m2ds2
