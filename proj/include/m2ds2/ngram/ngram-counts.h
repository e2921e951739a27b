// ngram/ngram-counts.h

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

#ifndef M2DS2_NGRAM_NGRAM_COUNTS_H_
#define M2DS2_NGRAM_NGRAM_COUNTS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace m2ds2 {
namespace ngram {

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kUnk = "<unk>";

using WordId = int32_t;
using NGram = std::vector<WordId>;

struct NGramHash {
  size_t operator()(const NGram &g) const noexcept {
    uint64_t h = 1469598103934665603ULL;
    for (WordId w : g) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(w)) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

template <typename V>
using NGramMap = std::unordered_map<NGram, V, NGramHash>;

// String <-> id mapping.  <s>, </s> and <unk> are always ids 0, 1, 2.
class Vocabulary {
 public:
  static constexpr WordId kBosId = 0;
  static constexpr WordId kEosId = 1;
  static constexpr WordId kUnkId = 2;

  Vocabulary();
  WordId Intern(std::string_view word);
  // Returns kUnkId for unknown words.
  WordId Lookup(std::string_view word) const;
  bool Contains(std::string_view word) const;
  const std::string &Word(WordId id) const { return words_[id]; }
  size_t size() const { return words_.size(); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> ids_;
};

// Raw n-gram counts of orders 1..order plus, for orders below the maximum,
// the number of distinct left extensions of each n-gram (the Kneser-Ney
// continuation count).  Continuation counts are computed on the unpruned
// data and survive pruning.
//
// Every counted line contributes "<s> w1 ... wn </s>"; <s> itself is never
// counted as a unigram since it is never predicted.
struct NGramCounts {
  int order = 0;
  Vocabulary vocab;
  std::vector<NGramMap<int64_t>> counts;           // counts[n-1]: n-grams
  std::vector<NGramMap<int64_t>> left_extensions;  // same keys, n < order

  size_t NumNGrams(int n) const { return counts[n - 1].size(); }
  // Count lookup by words; 0 when absent.
  int64_t Count(const std::vector<std::string> &words) const;
};

// Counts n-grams of orders 1..order over the given (already normalized)
// lines; lines are split on whitespace.  Throws DataError for an empty
// corpus and ConfigError for order < 1.
NGramCounts CountNGrams(const std::vector<std::string> &lines, int order);

// Drops every n-gram of order k >= 2 whose raw count is below
// min_count[k], then every entry whose prefix or suffix of order >= 2 was
// dropped.  Unigrams are never pruned.
NGramCounts PruneCounts(const NGramCounts &c, const std::map<int, int64_t> &min_count);

// The 3/5/7 thresholds for bigrams, trigrams and four-grams.
std::map<int, int64_t> DefaultPruneThresholds();

}  // namespace ngram
}  // namespace m2ds2

#endif  // M2DS2_NGRAM_NGRAM_COUNTS_H_
