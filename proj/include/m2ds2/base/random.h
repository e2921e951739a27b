// base/random.h

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

#ifndef M2DS2_BASE_RANDOM_H_
#define M2DS2_BASE_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace m2ds2 {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
inline uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a list of tags
// (step counters, mini-batch indices, stream ids).  All random draws in the
// toolkit go through seeds derived this way so that any position in a run
// can be reproduced without replaying earlier draws.
inline uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> tags) {
  uint64_t h = MixBits(seed);
  for (uint64_t t : tags) h = MixBits(h ^ MixBits(t + 0x632be59bd9b4e019ULL));
  return h;
}

// Uniform double in [0, 1) built from 53 random bits; independent of the
// standard library's distribution implementations.
inline double UniformUnit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

// Uniform integer in [0, n).
inline uint64_t UniformIndex(Rng &rng, uint64_t n) {
  // Lemire-style rejection keeps this unbiased.
  uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// Standard normal via Box-Muller.
double StandardNormal(Rng &rng);

// Fisher-Yates shuffle driven by UniformIndex.
template <typename It>
void Shuffle(It begin, It end, Rng &rng) {
  auto n = end - begin;
  for (decltype(n) i = n - 1; i > 0; --i) {
    auto j = static_cast<decltype(n)>(UniformIndex(rng, static_cast<uint64_t>(i + 1)));
    std::swap(begin[i], begin[j]);
  }
}

}  // namespace m2ds2

#endif  // M2DS2_BASE_RANDOM_H_
