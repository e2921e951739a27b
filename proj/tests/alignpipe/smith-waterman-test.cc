// tests/alignpipe/smith-waterman-test.cc

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

#include "m2ds2/alignpipe/smith-waterman.h"

#include <gtest/gtest.h>

#include "common/oracles.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace alignpipe {
namespace {

std::vector<std::string> Words(const std::string &s) {
  std::vector<std::string> out;
  for (char c : s)
    if (c != ' ') out.push_back(std::string(1, c));
  return out;
}

std::vector<std::string> RandomSeq(Rng *rng, int max_len, int alphabet) {
  std::vector<std::string> s(UniformIndex(*rng, max_len + 1));
  for (auto &w : s) w = std::string(1, 'a' + UniformIndex(*rng, alphabet));
  return s;
}

TEST(SmithWaterman, Identity) {
  SwParams p;
  SwAlignment a = SmithWaterman(Words("abcd"), Words("abcd"), p);
  EXPECT_EQ(a.hyp_begin, 0u);
  EXPECT_EQ(a.hyp_end, 4u);
  EXPECT_EQ(a.ref_begin, 0u);
  EXPECT_EQ(a.ref_end, 4u);
  EXPECT_DOUBLE_EQ(a.score, 4 * p.match);
}

TEST(SmithWaterman, InnerMatch) {
  SwParams p{1.0, -1.0, -1.0};
  SwAlignment a = SmithWaterman(Words("abcd"), Words("xbcy"), p);
  EXPECT_EQ(a.hyp_begin, 1u);
  EXPECT_EQ(a.hyp_end, 3u);
  EXPECT_EQ(a.ref_begin, 1u);
  EXPECT_EQ(a.ref_end, 3u);
  EXPECT_DOUBLE_EQ(a.score, 2.0);
}

TEST(SmithWaterman, DisjointIsEmpty) {
  SwAlignment a = SmithWaterman(Words("abc"), Words("xyz"));
  EXPECT_TRUE(a.empty());
  EXPECT_EQ(a.score, 0.0);
  EXPECT_TRUE(SmithWaterman({}, Words("x")).empty());
}

TEST(SmithWaterman, ZeroSumStretchIsIncluded) {
  SwAlignment a = SmithWaterman(Words("axxb"), Words("ayyb"));
  EXPECT_EQ(a.hyp_begin, 0u);
  EXPECT_EQ(a.hyp_end, 4u);
  EXPECT_EQ(a.ref_end, 4u);
  EXPECT_DOUBLE_EQ(a.score, 2.0);
}

TEST(SmithWaterman, RejectsBadParams) {
  EXPECT_THROW(SmithWaterman(Words("a"), Words("a"), SwParams{0.0, -1, -1}), ConfigError);
  EXPECT_THROW(SmithWaterman(Words("a"), Words("a"), SwParams{1.0, 0.5, -1}), ConfigError);
}

TEST(SmithWaterman, MatchesDpOracle) {
  Rng rng(2);
  const SwParams params[] = {{2, -1, -1}, {1, -1, -1}, {3, -2, -1.5}, {1, -0.5, -2}};
  for (int trial = 0; trial < 400; ++trial) {
    const SwParams &p = params[trial % 4];
    auto h = RandomSeq(&rng, 30, 4), r = RandomSeq(&rng, 30, 4);
    EXPECT_EQ(SmithWaterman(h, r, p).score, testing::SwScoreDp(h, r, p));
  }
}

TEST(SmithWaterman, MatchesSubstringBruteForce) {
  Rng rng(3);
  const SwParams params[] = {{2, -1, -1}, {1, -1, -1}, {3, -2, -1.5}};
  for (int trial = 0; trial < 300; ++trial) {
    const SwParams &p = params[trial % 3];
    auto h = RandomSeq(&rng, 8, 3), r = RandomSeq(&rng, 8, 3);
    SwAlignment got = SmithWaterman(h, r, p), want = testing::SwBruteForce(h, r, p);
    EXPECT_EQ(got.score, want.score);
    EXPECT_EQ(got.hyp_begin, want.hyp_begin);
    EXPECT_EQ(got.hyp_end, want.hyp_end);
    EXPECT_EQ(got.ref_begin, want.ref_begin);
    EXPECT_EQ(got.ref_end, want.ref_end);
    if (!got.empty()) {
      std::vector<std::string> hs(h.begin() + got.hyp_begin, h.begin() + got.hyp_end);
      std::vector<std::string> rs(r.begin() + got.ref_begin, r.begin() + got.ref_end);
      EXPECT_EQ(GlobalAlignmentScore(hs, rs, p), got.score);
    }
  }
}

TEST(GlobalAlignmentScore, MatchesOracle) {
  Rng rng(4);
  SwParams p;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = RandomSeq(&rng, 10, 3), b = RandomSeq(&rng, 10, 3);
    EXPECT_EQ(GlobalAlignmentScore(a, b, p), testing::NwScore(a, b, p));
  }
}

}  // namespace
}  // namespace alignpipe
}  // namespace m2ds2
