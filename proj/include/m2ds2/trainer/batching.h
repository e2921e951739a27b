// trainer/batching.h

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

#ifndef M2DS2_TRAINER_BATCHING_H_
#define M2DS2_TRAINER_BATCHING_H_

#include <cstdint>
#include <vector>

namespace m2ds2 {
namespace trainer {

// Endless sequence of item indices in [0, n): each epoch is a fresh seeded
// permutation.  Position p is a pure function of (n, seed, p), so a stream
// can be resumed at any position without replaying it.
class EpochStream {
 public:
  EpochStream(size_t n, uint64_t seed);
  size_t size() const { return n_; }
  size_t At(long long position) const;
  std::vector<int> Range(long long begin, long long count) const;

 private:
  const std::vector<int> &Epoch(long long e) const;
  size_t n_;
  uint64_t seed_;
  mutable long long cached_epoch_ = -1;
  mutable std::vector<int> cached_;
};

// Index lists of one accumulation cycle.  source holds one list per source
// mini-batch, target one per target mini-batch.
struct CycleBatches {
  std::vector<std::vector<int>> source;
  std::vector<std::vector<int>> target;
};

// Stream tags so that source and target permutations are independent.
constexpr uint64_t kSourceStreamTag = 0x5352;
constexpr uint64_t kTargetStreamTag = 0x5447;

uint64_t SourceStreamSeed(uint64_t seed);
uint64_t TargetStreamSeed(uint64_t seed);

// Cycle `cycle` (0-based) of the mixed schedule: source_batch items split
// into mini-batches of minibatch_size, then target_batch items likewise.
// Target items are reused with reshuffling when the target side is small.
// Throws DataError for an empty side.
CycleBatches MixedCycle(size_t n_source, size_t n_target, int source_batch, int target_batch,
                        int minibatch_size, uint64_t seed, long long cycle);

// Single-domain cycle of batch_size items in mini-batches of minibatch_size
// (the last may be short).  Uses the same stream as the source side of
// MixedCycle, or the target stream when target is set.
CycleBatches SingleCycle(size_t n, int batch_size, int minibatch_size, uint64_t seed,
                         long long cycle, bool target);

}  // namespace trainer
}  // namespace m2ds2

#endif  // M2DS2_TRAINER_BATCHING_H_
