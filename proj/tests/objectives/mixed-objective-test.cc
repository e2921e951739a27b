// tests/objectives/mixed-objective-test.cc

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

#include "m2ds2/objectives/mixed-objective.h"

#include <gtest/gtest.h>

#include <cmath>

#include "common/oracles.h"
#include "common/toy-model.h"
#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace objectives {
namespace {

using acoustic::Gradients;
using acoustic::Wav2VecModel;

class MixedLossTest : public ::testing::Test {
 protected:
  MixedLossTest() : model_(testing::ToyModelConfig(), 5) {
    // Plenty of masked steps so every batch contributes a contrastive term.
    ssl_.mask_prob = 0.3;
    ssl_.mask_span = 4;
    ssl_.num_distractors = 5;
    src_ = {testing::ToyMinibatch(model_, 2, true, 1), testing::ToyMinibatch(model_, 2, true, 2)};
    tgt_ = {testing::ToyMinibatch(model_, 2, false, 3), testing::ToyMinibatch(model_, 2, false, 4)};
  }

  LossComponents Run(double alpha, double beta, Gradients *g, bool source_ctc = true) {
    LossWeights w;
    w.alpha = alpha;
    w.beta = beta;
    return MixedLoss(model_, src_, tgt_, w, ssl_, 1.5, source_ctc, g);
  }

  static Eigen::VectorXd Flatten(const Gradients &g) {
    long long n = 0;
    for (size_t i = 0; i < g.size(); ++i) n += g[i].size();
    Eigen::VectorXd v(n);
    long long k = 0;
    for (size_t i = 0; i < g.size(); ++i)
      for (Eigen::Index j = 0; j < g[i].size(); ++j) v(k++) = g[i].data()[j];
    return v;
  }

  Wav2VecModel model_;
  SslConfig ssl_;
  std::vector<Minibatch> src_, tgt_;
};

TEST_F(MixedLossTest, ZeroWeightsReduceToCtc) {
  LossComponents c = Run(0.0, 0.0, nullptr);
  ASSERT_TRUE(c.ctc.has_value());
  EXPECT_FALSE(c.ss_src.has_value());
  EXPECT_FALSE(c.ss_tgt.has_value());
  EXPECT_NEAR(c.total, *c.ctc, 1e-12);
}

TEST_F(MixedLossTest, TotalIsWeightedSumOfParts) {
  LossComponents c = Run(0.01, 0.02, nullptr);
  ASSERT_TRUE(c.ctc && c.ss_src && c.ss_tgt);
  double sum = *c.ctc + 0.01 * *c.ss_src + 0.02 * *c.ss_tgt;
  EXPECT_NEAR(c.total, sum, 1e-6 * std::abs(sum));
  EXPECT_EQ(c.diversity_src.size(), 2u);
  EXPECT_EQ(c.diversity_tgt.size(), 2u);
  // Terms do not depend on their weight.
  LossComponents d = Run(0.5, 3.0, nullptr);
  EXPECT_NEAR(*d.ss_src, *c.ss_src, 1e-12 * std::abs(*c.ss_src));
  EXPECT_NEAR(*d.ss_tgt, *c.ss_tgt, 1e-12 * std::abs(*c.ss_tgt));
}

TEST_F(MixedLossTest, GradientIsLinearInWeights) {
  Gradients g00, g10, g01, gab;
  Run(0.0, 0.0, &g00);
  Run(1.0, 0.0, &g10);
  Run(0.0, 1.0, &g01);
  Run(0.3, 0.7, &gab);
  Eigen::VectorXd a = Flatten(g00), s = Flatten(g10) - a, t = Flatten(g01) - a;
  EXPECT_LE(testing::RelativeError(Flatten(gab), a + 0.3 * s + 0.7 * t), 1e-9);
  EXPECT_GT(s.norm(), 0.0);
  EXPECT_GT(t.norm(), 0.0);
}

TEST_F(MixedLossTest, AlphaZeroSkipsSourceSelfSupervision) {
  LossComponents c = Run(0.0, 0.02, nullptr);
  EXPECT_FALSE(c.ss_src.has_value());
  ASSERT_TRUE(c.ss_tgt.has_value());
  EXPECT_TRUE(c.diversity_src.empty());
  EXPECT_NEAR(c.total, *c.ctc + 0.02 * *c.ss_tgt, 1e-9);
}

TEST_F(MixedLossTest, SelfSupervisedOnly) {
  LossComponents c = Run(0.0, 1.0, nullptr, false);
  EXPECT_FALSE(c.ctc.has_value());
  ASSERT_TRUE(c.ss_tgt.has_value());
  EXPECT_NEAR(c.total, *c.ss_tgt, 1e-9);
}

TEST_F(MixedLossTest, GradientMatchesFiniteDifferences) {
  // The soft quantizer keeps the loss smooth in the parameters.
  ssl_.quantize_mode = acoustic::QuantizeMode::kSoft;
  acoustic::ParameterSet ps = model_.params();
  Gradients g;
  Run(0.4, 0.6, &g);
  auto loss = [&](const acoustic::ParameterSet &p) {
    Wav2VecModel m(model_.config(), p);
    LossWeights w;
    w.alpha = 0.4;
    w.beta = 0.6;
    return MixedLoss(m, src_, tgt_, w, ssl_, 1.5, true, nullptr).total;
  };
  Rng probe(7);
  EXPECT_LE(testing::ParameterGradientError(&ps, g, loss, 300, &probe), 1e-4);
}

TEST_F(MixedLossTest, UnlabeledSourceIsAnError) {
  src_[1].labels.clear();
  EXPECT_THROW(Run(0.0, 0.0, nullptr), DataError);
  LossWeights w;
  w.alpha = -1;
  EXPECT_THROW(w.Check(), ConfigError);
}

}  // namespace
}  // namespace objectives
}  // namespace m2ds2
