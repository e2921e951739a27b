// acoustic/mask-sampler.h

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

#ifndef M2DS2_ACOUSTIC_MASK_SAMPLER_H_
#define M2DS2_ACOUSTIC_MASK_SAMPLER_H_

#include <cstdint>
#include <vector>

namespace m2ds2 {
namespace acoustic {

constexpr double kDefaultMaskProb = 0.4;
constexpr int kDefaultMaskSpan = 10;

// Per-step probability of starting a span such that, away from the sequence
// edges, a step is covered by at least one span with probability p when span
// lengths are uniform on [1, max_span].
double SpanStartProbability(double p, int max_span);

// Span masking: each step starts a span with SpanStartProbability(p,
// max_span); span lengths are uniform on [1, max_span], clipped at T, and
// overlapping spans merge.  Deterministic in seed.  Throws ConfigError for p
// outside [0, 1] or max_span < 1.
std::vector<bool> SampleMask(int T, double p, int max_span, uint64_t seed);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_MASK_SAMPLER_H_
