// tests/base/parallel-test.cc

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

#include "m2ds2/base/parallel.h"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "m2ds2/base/log.h"

namespace m2ds2 {
namespace {

TEST(Parallel, EveryIndexRunsOnce) {
  for (int workers : {1, 2, 5}) {
    SetNumWorkers(workers);
    std::vector<int> hits(37, 0);
    ParallelFor(hits.size(), [&](size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  SetNumWorkers(1);
}

TEST(Parallel, PropagatesExceptions) {
  SetNumWorkers(3);
  EXPECT_THROW(ParallelFor(10,
                           [](size_t i) {
                             if (i == 7) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
  SetNumWorkers(1);
}

TEST(Log, VerboseLevelOverride) {
  int saved = GetVerboseLevel();
  SetVerboseLevel(2);
  EXPECT_EQ(GetVerboseLevel(), 2);
  SetVerboseLevel(saved);
}

}  // namespace
}  // namespace m2ds2
