// ngram/lm-adaptation.cc

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

#include "m2ds2/ngram/lm-adaptation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "m2ds2/base/error.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/ngram/kneser-ney.h"
#include "m2ds2/ngram/ngram-counts.h"

namespace m2ds2 {
namespace ngram {

NGramModel TrainLm(const std::vector<std::string> &lines, int order,
                   const std::map<int, int64_t> &prune_thresholds) {
  NGramCounts counts = CountNGrams(lines, order);
  if (!prune_thresholds.empty()) counts = PruneCounts(counts, prune_thresholds);
  return EstimateKneserNey(counts);
}

NGramModel BuildBiasedLm(const std::vector<std::string> &in_domain_lines) {
  if (in_domain_lines.empty()) throw DataError("in-domain text is empty");
  return TrainLm(in_domain_lines, kDefaultOrder, DefaultPruneThresholds());
}

std::vector<ScoredLine> ScoreLines(const NGramModel &m,
                                   const std::vector<std::string> &lines) {
  std::vector<ScoredLine> out(lines.size());
  ParallelFor(lines.size(), [&](size_t i) {
    out[i].text = lines[i];
    out[i].perplexity = Perplexity(m, lines[i]);
  });
  return out;
}

size_t NumKept(size_t num_lines, double keep_ratio) {
  // The small epsilon keeps products like 0.1 * 30 = 3.0000000000000004
  // from rounding up to 4.
  double k = std::ceil(keep_ratio * static_cast<double>(num_lines) - 1e-9);
  return std::clamp<size_t>(static_cast<size_t>(std::max(k, 1.0)), 1, num_lines);
}

std::vector<std::string> PerplexityFilter(const std::vector<std::string> &lines,
                                          const NGramModel &biased, double keep_ratio) {
  if (!(keep_ratio > 0.0 && keep_ratio <= 1.0))
    throw ConfigError("keep ratio must be in (0, 1]");
  if (lines.empty()) throw DataError("cannot filter an empty corpus");
  auto scored = ScoreLines(biased, lines);
  std::vector<size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return scored[a].perplexity < scored[b].perplexity;
  });
  size_t keep = NumKept(lines.size(), keep_ratio);
  std::vector<char> kept(lines.size(), 0);
  for (size_t i = 0; i < keep; ++i) kept[order[i]] = 1;
  std::vector<std::string> out;
  out.reserve(keep);
  for (size_t i = 0; i < lines.size(); ++i)
    if (kept[i]) out.push_back(lines[i]);
  return out;
}

}  // namespace ngram
}  // namespace m2ds2
