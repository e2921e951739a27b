// tests/ngram/ngram-model-test.cc

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

#include "m2ds2/ngram/ngram-model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "common/oracles.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/ngram/arpa-io.h"
#include "m2ds2/ngram/lm-adaptation.h"

namespace m2ds2 {
namespace ngram {
namespace {

NGramModel UniformQuarter() {
  Vocabulary v;
  v.Intern("a");
  v.Intern("b");
  NGramModel m(1, v);
  for (const char *w : {"a", "b", "</s>", "<unk>"})
    m.mutable_table(1)[{m.vocab().Lookup(w)}] = NGramEntry{std::log10(0.25), 0.0};
  m.mutable_table(1)[{Vocabulary::kBosId}] = NGramEntry{kLogZero, 0.0};
  return m;
}

std::vector<std::string> RandomCorpus(Rng *rng, int lines, int vocab) {
  std::vector<std::string> out;
  for (int i = 0; i < lines; ++i) {
    std::vector<std::string> w;
    int len = 1 + static_cast<int>(UniformIndex(*rng, 6));
    for (int k = 0; k < len; ++k) w.push_back("t" + std::to_string(UniformIndex(*rng, vocab)));
    out.push_back(JoinTokens(w));
  }
  return out;
}

TEST(NGramModel, UniformModel) {
  NGramModel m = UniformQuarter();
  EXPECT_NEAR(m.Score({"a", "b"}), std::log10(1.0 / 64.0), 1e-12);
  EXPECT_NEAR(m.Score({}), std::log10(0.25), 1e-12);
  EXPECT_NEAR(Perplexity(m, "a b a"), 4.0, 1e-12);
  EXPECT_NEAR(Perplexity(m, "zzz"), 4.0, 1e-12);
}

TEST(NGramModel, CertainEventsGivePerplexityOne) {
  Vocabulary v;
  WordId a = v.Intern("a");
  NGramModel m(2, v);
  m.mutable_table(1)[{a}] = NGramEntry{-1.0, 0.0};
  m.mutable_table(1)[{Vocabulary::kEosId}] = NGramEntry{-1.0, 0.0};
  m.mutable_table(1)[{Vocabulary::kUnkId}] = NGramEntry{-1.0, 0.0};
  m.mutable_table(1)[{Vocabulary::kBosId}] = NGramEntry{kLogZero, 0.0};
  m.mutable_table(2)[{Vocabulary::kBosId, a}] = NGramEntry{0.0, 0.0};
  m.mutable_table(2)[{a, Vocabulary::kEosId}] = NGramEntry{0.0, 0.0};
  EXPECT_DOUBLE_EQ(Perplexity(m, "a"), 1.0);
}

TEST(NGramModel, ScoreMatchesBackoffOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto lines = RandomCorpus(&rng, 30, 6);
    int order = 1 + static_cast<int>(UniformIndex(rng, 4));
    NGramModel m = TrainLm(lines, order, {});
    testing::NaiveBackoffLm oracle(ArpaToString(m));
    for (int k = 0; k < 5; ++k) {
      std::vector<std::string> s;
      for (int i = 0; i < 5; ++i) s.push_back("t" + std::to_string(UniformIndex(rng, 8)));
      EXPECT_NEAR(m.Score(s), oracle.SentenceLogProb(s), 1e-9 * std::abs(m.Score(s)));
      double ppl = Perplexity(m, JoinTokens(s));
      EXPECT_NEAR(ppl, oracle.Perplexity(s), 1e-9 * ppl);
    }
  }
}

TEST(NGramModel, ScoreIsSumOfEvents) {
  Rng rng(5);
  auto lines = RandomCorpus(&rng, 50, 5);
  NGramModel m = TrainLm(lines, 3, {});
  testing::NaiveBackoffLm oracle(ArpaToString(m));
  for (int k = 0; k < 20; ++k) {
    auto s1 = SplitTokens(lines[UniformIndex(rng, lines.size())]);
    auto s2 = SplitTokens(lines[UniformIndex(rng, lines.size())]);
    std::vector<std::string> s = s1;
    s.insert(s.end(), s2.begin(), s2.end());
    auto ev = m.ScoreEvents(s);
    ASSERT_EQ(ev.size(), s.size() + 1);
    double sum = 0.0;
    std::vector<std::string> hist{"<s>"};
    for (size_t i = 0; i < ev.size(); ++i) {
      std::string w = i < s.size() ? s[i] : "</s>";
      EXPECT_NEAR(ev[i], oracle.LogProb(hist, w), 1e-12);
      hist.push_back(w);
      sum += ev[i];
    }
    EXPECT_NEAR(m.Score(s), sum, 1e-9);
  }
}

TEST(NGramModel, DecoderStateAgreesWithScore) {
  Rng rng(6);
  auto lines = RandomCorpus(&rng, 40, 5);
  NGramModel m = TrainLm(lines, 4, {});
  for (const auto &line : lines) {
    auto words = SplitTokens(line);
    auto state = m.BeginState();
    double s = 0.0;
    for (const auto &w : words) s += m.ScoreWord(state, w);
    s += m.ScoreEnd(state);
    EXPECT_NEAR(s, m.Score(words), 1e-12);
  }
}

TEST(ArpaIo, RoundTripIsLossless) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    NGramModel m = TrainLm(RandomCorpus(&rng, 40, 7), 1 + trial % 4, {});
    std::string text = ArpaToString(m);
    std::istringstream is(text);
    NGramModel r = ReadArpa(is);
    EXPECT_EQ(ArpaToString(r), text);
    ASSERT_EQ(r.order(), m.order());
    for (int n = 1; n <= m.order(); ++n) {
      ASSERT_EQ(r.table(n).size(), m.table(n).size());
      for (const auto &[g, e] : m.table(n)) {
        std::vector<std::string> words;
        NGram rg;
        for (WordId w : g) rg.push_back(r.vocab().Lookup(m.vocab().Word(w)));
        auto it = r.table(n).find(rg);
        ASSERT_NE(it, r.table(n).end());
        EXPECT_EQ(it->second.log_prob, e.log_prob);
        EXPECT_EQ(it->second.log_backoff, e.log_backoff);
      }
    }
  }
}

TEST(ArpaIo, RejectsMalformedInput) {
  std::istringstream a("not an arpa file\n");
  EXPECT_THROW(ReadArpa(a), DataError);
  std::istringstream b("\\data\\\nngram 1=2\n\n\\1-grams:\n-0.3\ta\n\\end\\\n");
  EXPECT_THROW(ReadArpa(b), DataError);
}

}  // namespace
}  // namespace ngram
}  // namespace m2ds2
