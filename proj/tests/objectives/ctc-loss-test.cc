// tests/objectives/ctc-loss-test.cc

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

#include "m2ds2/objectives/ctc-loss.h"

#include <gtest/gtest.h>

#include <cmath>

#include "common/oracles.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace objectives {
namespace {

TEST(CtcLoss, UniformTwoFrames) {
  // Labels {blank, a, b}, every frame uniform.
  Matrix lp = Matrix::Constant(2, 3, -std::log(3.0));
  // "a" is emitted by (a a), (a -), (- a).
  EXPECT_NEAR(CtcLoss(lp, {1}).loss, std::log(3.0), 1e-12);
  EXPECT_NEAR(CtcLoss(lp, {1, 2}).loss, std::log(9.0), 1e-12);
  EXPECT_THROW(CtcLoss(lp, {1, 1}), DataError);
  EXPECT_EQ(CtcMinimumFrames({1, 1}), 3);
  EXPECT_EQ(CtcMinimumFrames({1, 2}), 2);
  EXPECT_EQ(CtcMinimumFrames({}), 0);
  EXPECT_THROW(CtcLoss(lp, {0}), DataError);
  EXPECT_THROW(CtcLoss(lp, {3}), DataError);
}

TEST(CtcLoss, MatchesPathEnumeration) {
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    int T = 1 + static_cast<int>(UniformIndex(rng, 5));
    int L = 2 + static_cast<int>(UniformIndex(rng, 3));
    Matrix lp = testing::RandomLogProbs(T, L, &rng, 2.0);
    std::vector<int> target;
    int len = static_cast<int>(UniformIndex(rng, 4));
    for (int i = 0; i < len; ++i) target.push_back(1 + static_cast<int>(UniformIndex(rng, L - 1)));
    if (CtcMinimumFrames(target) > T) {
      EXPECT_THROW(CtcLoss(lp, target), DataError);
      continue;
    }
    double want = testing::CtcByEnumeration(lp, target, 0);
    EXPECT_NEAR(CtcLoss(lp, target).loss, want, 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST(CtcLoss, GradientMatchesFiniteDifferences) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix lp = testing::RandomLogProbs(12, 5, &rng);
    std::vector<int> target{1, 3, 3, 2};
    CtcResult r = CtcLoss(lp, target);
    double err = testing::MatrixGradientError(
        lp, r.grad, [&](const Matrix &x) { return CtcLoss(x, target).loss; });
    EXPECT_LE(err, 1e-6);
  }
}

TEST(CtcLoss, OccupanciesSumToOnePerFrame) {
  Rng rng(3);
  Matrix lp = testing::RandomLogProbs(20, 6, &rng);
  CtcResult r = CtcLoss(lp, {1, 2, 5, 4});
  for (Eigen::Index t = 0; t < lp.rows(); ++t) EXPECT_NEAR(-r.grad.row(t).sum(), 1.0, 1e-9);
}

TEST(CtcLoss, LongSequenceStaysFinite) {
  Rng rng(4);
  Matrix lp = testing::RandomLogProbs(3000, 30, &rng, 5.0);
  std::vector<int> target;
  for (int i = 0; i < 400; ++i) target.push_back(1 + i % 29);
  CtcResult r = CtcLoss(lp, target);
  EXPECT_TRUE(std::isfinite(r.loss));
  EXPECT_TRUE(r.grad.allFinite());
}

}  // namespace
}  // namespace objectives
}  // namespace m2ds2
