// alignpipe/smith-waterman.h

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

#ifndef M2DS2_ALIGNPIPE_SMITH_WATERMAN_H_
#define M2DS2_ALIGNPIPE_SMITH_WATERMAN_H_

#include <string>
#include <vector>

namespace m2ds2 {
namespace alignpipe {

struct SwParams {
  double match = 2.0;
  double mismatch = -1.0;
  double gap = -1.0;
  // Throws ConfigError unless match > 0 and mismatch, gap <= 0.
  void Check() const;
};

// Half-open spans [begin, end).  An empty alignment has all spans at 0 and
// score 0.
struct SwAlignment {
  size_t hyp_begin = 0, hyp_end = 0;
  size_t ref_begin = 0, ref_end = 0;
  double score = 0.0;
  bool empty() const { return hyp_end == hyp_begin; }
};

// Optimal local alignment.  Among all maximal-score alignments the one with
// the smallest ref start is chosen, then the smallest hyp start, then the
// largest ref end and hyp end.  Zero-sum prefixes count as part of an
// alignment, so "a x x b" against "a y y b" spans all four words.
SwAlignment SmithWaterman(const std::vector<std::string> &hyp,
                          const std::vector<std::string> &ref,
                          const SwParams &params = SwParams());

// Needleman-Wunsch score of aligning the two sequences end to end.
double GlobalAlignmentScore(const std::vector<std::string> &a,
                            const std::vector<std::string> &b,
                            const SwParams &params = SwParams());

}  // namespace alignpipe
}  // namespace m2ds2

#endif  // M2DS2_ALIGNPIPE_SMITH_WATERMAN_H_
