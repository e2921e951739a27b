// acoustic/mask-sampler.cc

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

#include "m2ds2/acoustic/mask-sampler.h"

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace acoustic {

namespace {
// Probability that an interior step is covered, for start probability s.
double Coverage(double s, int max_span) {
  double uncovered = 1.0;
  for (int d = 0; d < max_span; ++d)
    uncovered *= 1.0 - s * static_cast<double>(max_span - d) / max_span;
  return 1.0 - uncovered;
}
}  // namespace

double SpanStartProbability(double p, int max_span) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("mask probability must be in [0, 1]");
  if (max_span < 1) throw ConfigError("max_span must be at least 1");
  if (p == 0.0 || p == 1.0) return p;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (Coverage(mid, max_span) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<bool> SampleMask(int T, double p, int max_span, uint64_t seed) {
  double start_p = SpanStartProbability(p, max_span);
  std::vector<bool> mask(T > 0 ? T : 0, false);
  Rng rng(seed);
  for (int t = 0; t < T; ++t) {
    // Both draws happen unconditionally so the stream does not depend on p.
    bool start = UniformUnit(rng) < start_p;
    int len = 1 + static_cast<int>(UniformIndex(rng, static_cast<uint64_t>(max_span)));
    if (!start) continue;
    for (int k = t; k < T && k < t + len; ++k) mask[k] = true;
  }
  return mask;
}

}  // namespace acoustic
}  // namespace m2ds2
