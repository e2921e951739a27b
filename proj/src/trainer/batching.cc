// trainer/batching.cc

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

#include "m2ds2/trainer/batching.h"

#include <algorithm>
#include <numeric>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace trainer {

EpochStream::EpochStream(size_t n, uint64_t seed) : n_(n), seed_(seed) {
  if (n == 0) throw DataError("cannot draw batches from an empty set");
}

const std::vector<int> &EpochStream::Epoch(long long e) const {
  if (e != cached_epoch_) {
    cached_.resize(n_);
    std::iota(cached_.begin(), cached_.end(), 0);
    Rng rng(DeriveSeed(seed_, {static_cast<uint64_t>(e)}));
    Shuffle(cached_.begin(), cached_.end(), rng);
    cached_epoch_ = e;
  }
  return cached_;
}

size_t EpochStream::At(long long position) const {
  long long n = static_cast<long long>(n_);
  return Epoch(position / n)[position % n];
}

std::vector<int> EpochStream::Range(long long begin, long long count) const {
  std::vector<int> out;
  out.reserve(count);
  for (long long p = begin; p < begin + count; ++p) out.push_back(static_cast<int>(At(p)));
  return out;
}

uint64_t SourceStreamSeed(uint64_t seed) { return DeriveSeed(seed, {kSourceStreamTag}); }
uint64_t TargetStreamSeed(uint64_t seed) { return DeriveSeed(seed, {kTargetStreamTag}); }

namespace {

std::vector<std::vector<int>> Split(const std::vector<int> &items, int minibatch_size) {
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < items.size(); i += minibatch_size)
    out.emplace_back(items.begin() + i,
                     items.begin() + std::min(items.size(), i + static_cast<size_t>(minibatch_size)));
  return out;
}

}  // namespace

CycleBatches MixedCycle(size_t n_source, size_t n_target, int source_batch, int target_batch,
                        int minibatch_size, uint64_t seed, long long cycle) {
  if (source_batch <= 0 || target_batch < 0 || minibatch_size <= 0 || cycle < 0)
    throw ConfigError("bad batch composition");
  EpochStream src(n_source, SourceStreamSeed(seed));
  CycleBatches b;
  b.source = Split(src.Range(cycle * source_batch, source_batch), minibatch_size);
  if (target_batch > 0) {
    EpochStream tgt(n_target, TargetStreamSeed(seed));
    b.target = Split(tgt.Range(cycle * target_batch, target_batch), minibatch_size);
  }
  return b;
}

CycleBatches SingleCycle(size_t n, int batch_size, int minibatch_size, uint64_t seed,
                         long long cycle, bool target) {
  if (batch_size <= 0 || minibatch_size <= 0 || cycle < 0) throw ConfigError("bad batch size");
  EpochStream s(n, target ? TargetStreamSeed(seed) : SourceStreamSeed(seed));
  CycleBatches b;
  (target ? b.target : b.source) = Split(s.Range(cycle * batch_size, batch_size), minibatch_size);
  return b;
}

}  // namespace trainer
}  // namespace m2ds2
