// ngram/lm-adaptation.h

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

#ifndef M2DS2_NGRAM_LM_ADAPTATION_H_
#define M2DS2_NGRAM_LM_ADAPTATION_H_

#include <map>
#include <string>
#include <vector>

#include "m2ds2/ngram/ngram-model.h"

namespace m2ds2 {
namespace ngram {

inline constexpr int kDefaultOrder = 4;
inline constexpr double kDefaultKeepRatio = 0.10;

// count -> prune -> estimate.
NGramModel TrainLm(const std::vector<std::string> &lines, int order,
                   const std::map<int, int64_t> &prune_thresholds);

// Four-gram model on in-domain text only, pruned with the 3/5/7 thresholds.
// Throws DataError for empty text.
NGramModel BuildBiasedLm(const std::vector<std::string> &in_domain_lines);

// Perplexity of every line under the model, computed in parallel.
std::vector<ScoredLine> ScoreLines(const NGramModel &m,
                                   const std::vector<std::string> &lines);

// Keeps the ceil(keep_ratio * N) lines with the lowest perplexity (ties go
// to the earlier line) and returns them in their original order.
// Throws ConfigError unless 0 < keep_ratio <= 1, DataError for an empty
// corpus.
std::vector<std::string> PerplexityFilter(const std::vector<std::string> &lines,
                                          const NGramModel &biased,
                                          double keep_ratio = kDefaultKeepRatio);

// Number of lines PerplexityFilter keeps.
size_t NumKept(size_t num_lines, double keep_ratio);

}  // namespace ngram
}  // namespace m2ds2

#endif  // M2DS2_NGRAM_LM_ADAPTATION_H_
