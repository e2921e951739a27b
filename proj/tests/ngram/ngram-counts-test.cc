// tests/ngram/ngram-counts-test.cc

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

#include "m2ds2/ngram/ngram-counts.h"

#include <gtest/gtest.h>

#include <map>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/ngram/kneser-ney.h"

namespace m2ds2 {
namespace ngram {
namespace {

std::vector<std::string> RandomLines(Rng *rng, int n, int vocab, int max_len) {
  std::vector<std::string> lines;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> w;
    int len = static_cast<int>(UniformIndex(*rng, max_len + 1));
    for (int k = 0; k < len; ++k) w.push_back("w" + std::to_string(UniformIndex(*rng, vocab)));
    lines.push_back(JoinTokens(w));
  }
  return lines;
}

// Recount with nothing but string maps.
std::map<std::vector<std::string>, int64_t> Recount(const std::vector<std::string> &lines,
                                                     int order) {
  std::map<std::vector<std::string>, int64_t> c;
  for (const auto &line : lines) {
    std::vector<std::string> s{"<s>"};
    for (auto &w : SplitTokens(line)) s.push_back(w);
    s.push_back("</s>");
    for (size_t i = 0; i < s.size(); ++i)
      for (int n = 1; n <= order && i + n <= s.size(); ++n) {
        std::vector<std::string> g(s.begin() + i, s.begin() + i + n);
        if (n == 1 && g[0] == "<s>") continue;
        ++c[g];
      }
  }
  return c;
}

TEST(CountNGrams, SmallExamples) {
  NGramCounts c = CountNGrams({"a b"}, 2);
  EXPECT_EQ(c.NumNGrams(1), 3u);
  EXPECT_EQ(c.Count({"a"}), 1);
  EXPECT_EQ(c.Count({"b"}), 1);
  EXPECT_EQ(c.Count({"</s>"}), 1);
  EXPECT_EQ(c.Count({"<s>"}), 0);
  EXPECT_EQ(c.NumNGrams(2), 3u);
  EXPECT_EQ(c.Count({"<s>", "a"}), 1);
  EXPECT_EQ(c.Count({"a", "b"}), 1);
  EXPECT_EQ(c.Count({"b", "</s>"}), 1);

  NGramCounts d = CountNGrams({"a", "a"}, 1);
  EXPECT_EQ(d.NumNGrams(1), 2u);
  EXPECT_EQ(d.Count({"a"}), 2);
  EXPECT_EQ(d.Count({"</s>"}), 2);
}

TEST(CountNGrams, MatchesRecountOracle) {
  Rng rng(21);
  auto lines = RandomLines(&rng, 1000, 12, 8);
  for (int order = 1; order <= 4; ++order) {
    NGramCounts c = CountNGrams(lines, order);
    auto oracle = Recount(lines, order);
    size_t total = 0;
    for (int n = 1; n <= order; ++n) total += c.NumNGrams(n);
    EXPECT_EQ(total, oracle.size());
    for (const auto &[g, n] : oracle) EXPECT_EQ(c.Count(g), n) << JoinTokens(g);
  }
}

TEST(CountNGrams, Errors) {
  EXPECT_THROW(CountNGrams({}, 2), DataError);
  EXPECT_THROW(CountNGrams({"a"}, 0), ConfigError);
}

TEST(PruneCounts, StrictLessThanThresholds) {
  std::vector<std::string> lines;
  for (int i = 0; i < 2; ++i) lines.push_back("p q");
  for (int i = 0; i < 5; ++i) lines.push_back("x y z");
  for (int i = 0; i < 6; ++i) lines.push_back("k l m n");
  NGramCounts c = PruneCounts(CountNGrams(lines, 4), DefaultPruneThresholds());
  EXPECT_EQ(c.Count({"p", "q"}), 0);                     // 2 < 3
  EXPECT_EQ(c.Count({"x", "y", "z"}), 5);                // 5 >= 5
  EXPECT_EQ(c.Count({"k", "l", "m", "n"}), 0);           // 6 < 7
  EXPECT_EQ(c.Count({"k", "l", "m"}), 6);
  EXPECT_EQ(c.Count({"p"}), 2);                          // unigrams stay
}

TEST(PruneCounts, RaisingAThresholdNeverGrowsTheModel) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto lines = RandomLines(&rng, 200, 5, 6);
    NGramCounts c = CountNGrams(lines, 4);
    std::map<int, int64_t> t{{2, 1}, {3, 1}, {4, 1}};
    size_t last = EstimateKneserNey(PruneCounts(c, t)).NumEntries();
    for (int step = 0; step < 12; ++step) {
      t[2 + static_cast<int>(UniformIndex(rng, 3))] += 1 + static_cast<int64_t>(UniformIndex(rng, 3));
      size_t now = EstimateKneserNey(PruneCounts(c, t)).NumEntries();
      EXPECT_LE(now, last);
      last = now;
    }
  }
}

}  // namespace
}  // namespace ngram
}  // namespace m2ds2
