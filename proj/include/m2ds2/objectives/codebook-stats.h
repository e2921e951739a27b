// objectives/codebook-stats.h

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

#ifndef M2DS2_OBJECTIVES_CODEBOOK_STATS_H_
#define M2DS2_OBJECTIVES_CODEBOOK_STATS_H_

#include <string>
#include <vector>

#include "m2ds2/acoustic/tape.h"

namespace m2ds2 {
namespace objectives {

struct CodebookStats {
  int num_codebooks = 0;
  int codebook_size = 0;
  std::vector<std::vector<double>> usage;  // normalized histogram per codebook
  std::vector<double> entropy;             // nats
  std::vector<double> effective_usage;     // exp(entropy), in [1, V]

  double MeanEffectiveUsage() const;
  std::string ToJson() const;
};

// Histogram of the selected entries.  Each element of indices is one step's
// G-tuple.  Throws DataError for an empty stream or out-of-range index.
CodebookStats CodebookStatsFromIndices(const std::vector<std::vector<int>> &indices, int G, int V);

// Same statistics for averaged distributions (one row, G blocks of V).
CodebookStats CodebookStatsFromDistribution(const acoustic::Matrix &pbar, int G);

}  // namespace objectives
}  // namespace m2ds2

#endif  // M2DS2_OBJECTIVES_CODEBOOK_STATS_H_
