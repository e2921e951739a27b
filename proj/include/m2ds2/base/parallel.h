// base/parallel.h

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

#ifndef M2DS2_BASE_PARALLEL_H_
#define M2DS2_BASE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace m2ds2 {

// Number of worker threads used by ParallelFor.  Defaults to the number of
// hardware threads; the command-line tool overrides it with --workers.
int GetNumWorkers();
void SetNumWorkers(int n);

// Runs fn(i) for i in [0, n).  Iterations are split into contiguous blocks,
// one per worker; callers write results into slot i so the outcome does not
// depend on the worker count.  The first exception thrown is rethrown.
void ParallelFor(size_t n, const std::function<void(size_t)> &fn);

}  // namespace m2ds2

#endif  // M2DS2_BASE_PARALLEL_H_
