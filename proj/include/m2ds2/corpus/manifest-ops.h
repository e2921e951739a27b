// corpus/manifest-ops.h

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

#ifndef M2DS2_CORPUS_MANIFEST_OPS_H_
#define M2DS2_CORPUS_MANIFEST_OPS_H_

#include <cstdint>
#include <string_view>

#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace corpus {

constexpr double kDefaultMaxTrainSeconds = 12.0;

// Keeps entries with duration <= max_seconds (inclusive), preserving order.
Manifest FilterByDuration(const Manifest &m,
                          double max_seconds = kDefaultMaxTrainSeconds);

// Uniformly samples utterances without replacement, in a seeded random
// order, adding each one that still fits into the fraction * total
// duration budget.  The result keeps the original order.  fraction == 1
// returns an identical manifest.  Throws ConfigError unless 0 < fraction <= 1.
Manifest SubsetFraction(const Manifest &m, double fraction, uint64_t seed);

// Gender from a transliterated speaker name: female iff it ends in
// "a", "h", "w" or "is" (case-insensitive), male otherwise.
Gender InferGender(std::string_view speaker_name);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_MANIFEST_OPS_H_
