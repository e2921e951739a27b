// tests/decoder/ctc-decoder-test.cc

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

#include "m2ds2/decoder/ctc-decoder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "common/oracles.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"
#include "m2ds2/ngram/arpa-io.h"

namespace m2ds2 {
namespace decoder {
namespace {

// A hand-written bigram over the words the toy vocabulary can spell.
const char *kArpa =
    "\\data\\\n"
    "ngram 1=7\n"
    "ngram 2=4\n"
    "\n"
    "\\1-grams:\n"
    "-0.8\t</s>\n"
    "-99\t<s>\t-0.3\n"
    "-1.5\t<unk>\n"
    "-0.6\ta\t-0.2\n"
    "-0.9\tb\t-0.25\n"
    "-0.7\tab\t-0.1\n"
    "-1.2\tba\t-0.4\n"
    "\n"
    "\\2-grams:\n"
    "-0.3\t<s> ab\n"
    "-0.2\tab ba\n"
    "-0.5\ta b\n"
    "-0.4\tba </s>\n"
    "\n"
    "\\end\\\n";

class DecoderTest : public ::testing::Test {
 protected:
  using Matrix = Eigen::MatrixXd;

  DecoderTest() : vocab_(CharVocab::FromTranscripts({"ab ba"})), oracle_(kArpa) {
    std::istringstream is(kArpa);
    lm_ = ngram::ReadArpa(is);
  }

  // Best combined score over every collapsed label sequence.
  double Exhaustive(const Matrix &lp, const DecodeConfig &cfg, bool with_lm,
                    std::vector<int> *arg) const {
    double best = -1e300;
    for (const auto &kv : testing::CollapsedMarginals(lp, 0)) {
      auto words = LabelWords(kv.first, vocab_);
      double lm = with_lm ? oracle_.SentenceLogProb(words) * std::log(10.0) : 0.0;
      double s = kv.second + cfg.lm_weight * lm + cfg.word_bonus * words.size();
      if (s > best) {
        best = s;
        *arg = kv.first;
      }
    }
    return best;
  }

  CharVocab vocab_;
  testing::NaiveBackoffLm oracle_;
  ngram::NGramModel lm_;
};

TEST_F(DecoderTest, GreedyCollapsesRepeatsAndBlanks) {
  // Frame argmax: a a - a b | b
  std::vector<int> path{3, 3, 0, 3, 4, 1, 4};
  Matrix lp = Matrix::Constant(7, 5, -5.0);
  for (int t = 0; t < 7; ++t) lp(t, path[t]) = -0.1;
  EXPECT_EQ(GreedyLabels(lp), (std::vector<int>{3, 3, 4, 1, 4}));
  EXPECT_EQ(GreedyDecode(lp, vocab_), "aab b");
  EXPECT_EQ(LabelWords({1, 3, 1, 1, 4, 1}, vocab_), (std::vector<std::string>{"a", "b"}));
  EXPECT_THROW(GreedyDecode(Matrix::Zero(3, 4), vocab_), ConfigError);
}

TEST_F(DecoderTest, WideBeamIsExactWithoutLm) {
  Rng rng(1);
  DecodeConfig cfg;
  cfg.beam_width = 1000;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix lp = testing::RandomLogProbs(4, 5, &rng, 2.0);
    std::vector<int> arg;
    double want = Exhaustive(lp, cfg, false, &arg);
    Hypothesis h = BeamDecode(lp, vocab_, nullptr, cfg);
    EXPECT_NEAR(h.combined, want, 1e-9);
    EXPECT_NEAR(h.acoustic, -testing::CtcByEnumeration(lp, h.labels, 0), 1e-9);
  }
}

TEST_F(DecoderTest, WideBeamIsExactWithLm) {
  Rng rng(2);
  DecodeConfig cfg;
  cfg.beam_width = 1000;
  cfg.lm_weight = 0.8;
  cfg.word_bonus = 0.3;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix lp = testing::RandomLogProbs(4, 5, &rng, 1.5);
    std::vector<int> arg;
    double want = Exhaustive(lp, cfg, true, &arg);
    Hypothesis h = BeamDecode(lp, vocab_, &lm_, cfg);
    EXPECT_NEAR(h.combined, want, 1e-9) << "trial " << trial;
    Hypothesis r = ScoreLabels(lp, h.labels, vocab_, &lm_, cfg);
    EXPECT_NEAR(r.combined, h.combined, 1e-9);
    EXPECT_NEAR(r.lm, h.lm, 1e-9);
  }
}

TEST_F(DecoderTest, LmScoreMatchesOracle) {
  for (const auto &ws : std::vector<std::vector<std::string>>{
           {}, {"ab"}, {"ab", "ba"}, {"a", "b", "zz"}, {"ba", "ba", "a"}}) {
    EXPECT_NEAR(WordSequenceLmScore(ws, &lm_), oracle_.SentenceLogProb(ws) * std::log(10.0), 1e-9);
  }
  EXPECT_EQ(WordSequenceLmScore({"ab"}, nullptr), 0.0);
}

TEST_F(DecoderTest, WidthOneFollowsGreedy) {
  Rng rng(3);
  DecodeConfig cfg;
  cfg.beam_width = 1;
  for (int trial = 0; trial < 50; ++trial) {
    Matrix lp = testing::RandomLogProbs(15, 5, &rng, 2.0);
    Hypothesis h = BeamDecode(lp, vocab_, nullptr, cfg);
    EXPECT_EQ(h.text, GreedyDecode(lp, vocab_));
  }
}

TEST_F(DecoderTest, NeverScoresBelowGreedy) {
  Rng rng(4);
  DecodeConfig cfg;
  cfg.beam_width = 3;
  for (int trial = 0; trial < 50; ++trial) {
    Matrix lp = testing::RandomLogProbs(20, 5, &rng, 1.0);
    Hypothesis h = BeamDecode(lp, vocab_, &lm_, cfg);
    Hypothesis g = ScoreLabels(lp, GreedyLabels(lp), vocab_, &lm_, cfg);
    EXPECT_GE(h.combined, g.combined - 1e-12);
  }
}

TEST_F(DecoderTest, DeterministicAndValidated) {
  Rng rng(5);
  Matrix lp = testing::RandomLogProbs(25, 5, &rng, 1.0);
  Hypothesis a = BeamDecode(lp, vocab_, &lm_), b = BeamDecode(lp, vocab_, &lm_);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.combined, b.combined);
  DecodeConfig bad;
  bad.beam_width = 0;
  EXPECT_THROW(BeamDecode(lp, vocab_, nullptr, bad), ConfigError);
  // An impossible frame leaves nothing in the beam.
  Matrix dead = Matrix::Constant(2, 5, -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(BeamDecode(dead, vocab_, nullptr).underflow);
}

}  // namespace
}  // namespace decoder
}  // namespace m2ds2
