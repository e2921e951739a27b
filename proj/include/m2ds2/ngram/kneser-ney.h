// ngram/kneser-ney.h

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

#ifndef M2DS2_NGRAM_KNESER_NEY_H_
#define M2DS2_NGRAM_KNESER_NEY_H_

#include <array>
#include <vector>

#include "m2ds2/ngram/ngram-counts.h"
#include "m2ds2/ngram/ngram-model.h"

namespace m2ds2 {
namespace ngram {

// Discounts for adjusted counts 1, 2 and 3+ at one order.
struct Discounts {
  std::array<double, 3> d{0.75, 0.75, 0.75};
  bool fallback = true;  // absolute discounting used
  double For(int64_t count) const { return d[count >= 3 ? 2 : count - 1]; }
};

inline constexpr double kFallbackDiscount = 0.75;

// Modified Kneser-Ney discounts from counts-of-counts n1..n4:
//   Y = n1 / (n1 + 2 n2), Dk = k - (k + 1) Y n(k+1) / nk.
// Falls back to a flat 0.75 when any of n1..n4 is zero or a discount
// leaves [0, k].
Discounts ComputeDiscounts(const std::array<int64_t, 4> &counts_of_counts);

// Interpolated modified Kneser-Ney estimate written in backoff form.
// Adjusted counts are raw counts at the highest order and for n-grams that
// start with <s>, continuation counts otherwise.  The unigram level is
// interpolated with a uniform distribution over the predicted vocabulary
// (everything but <s>, including <unk>).  Throws DataError for empty
// counts.
NGramModel EstimateKneserNey(const NGramCounts &c,
                             std::vector<Discounts> *discounts_out = nullptr);

}  // namespace ngram
}  // namespace m2ds2

#endif  // M2DS2_NGRAM_KNESER_NEY_H_
