// tests/metrics/wer-test.cc

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

#include "m2ds2/metrics/wer.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace metrics {
namespace {

using Words = std::vector<std::string>;

long long Levenshtein(const Words &a, const Words &b) {
  std::vector<std::vector<long long>> d(a.size() + 1, std::vector<long long>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (size_t i = 1; i <= a.size(); ++i)
    for (size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

TEST(AlignWords, SmallCases) {
  EditCounts e = AlignWords({"a", "b", "c"}, {"a", "x", "c", "d"});
  EXPECT_EQ(e.substitutions, 1);
  EXPECT_EQ(e.insertions, 1);
  EXPECT_EQ(e.deletions, 0);
  e = AlignWords({"a", "b"}, {});
  EXPECT_EQ(e.deletions, 2);
  e = AlignWords({}, {"a"});
  EXPECT_EQ(e.insertions, 1);
  // Equal cost scripts prefer substitutions.
  e = AlignWords({"a"}, {"b"});
  EXPECT_EQ(e.substitutions, 1);
  EXPECT_EQ(e.Errors(), 1);
}

TEST(AlignWords, MatchesLevenshtein) {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    Words a, b;
    int na = static_cast<int>(UniformIndex(rng, 9)), nb = static_cast<int>(UniformIndex(rng, 9));
    for (int i = 0; i < na; ++i) a.push_back(std::string(1, 'a' + UniformIndex(rng, 3)));
    for (int i = 0; i < nb; ++i) b.push_back(std::string(1, 'a' + UniformIndex(rng, 3)));
    EditCounts e = AlignWords(a, b);
    EXPECT_EQ(e.Errors(), Levenshtein(a, b));
    // Counts are consistent with the lengths.
    EXPECT_EQ(na - e.deletions + e.insertions, nb);
  }
}

TEST(ComputeWer, PoolsCountsOverUtterances) {
  EvalResult r = ComputeWer({"a b c", "d e"}, {"a c", "d e f"});
  EXPECT_EQ(r.n_ref_words, 5);
  EXPECT_EQ(r.deletions, 1);
  EXPECT_EQ(r.insertions, 1);
  EXPECT_DOUBLE_EQ(r.wer, 40.0);
  EXPECT_EQ(FormatEvalResult(r), "%WER 40.00 [ 2 / 5, 1 ins, 1 del, 0 sub ]");
  EXPECT_DOUBLE_EQ(ComputeWer({"a"}, {"a"}).wer, 0.0);
  EXPECT_DOUBLE_EQ(ComputeWer({"a"}, {"b c d"}).wer, 300.0);
  EXPECT_THROW(ComputeWer({"a"}, {}), ConfigError);
  EXPECT_THROW(ComputeWer({""}, {"x"}), DataError);
}

TEST(Rai, RelativeImprovement) {
  EXPECT_NEAR(Rai(50.0, 100.0), 50.0, 1e-12);
  EXPECT_NEAR(Rai(110.0, 100.0), -10.0, 1e-12);
  EXPECT_NEAR(Rai(22.4, 44.8), 50.0, 1e-12);
  EXPECT_THROW(Rai(1.0, 0.0), ConfigError);
}

}  // namespace
}  // namespace metrics
}  // namespace m2ds2
