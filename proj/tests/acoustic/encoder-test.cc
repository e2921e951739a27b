// tests/acoustic/encoder-test.cc

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

#include <gtest/gtest.h>

#include "common/oracles.h"
#include "m2ds2/acoustic/context-encoder.h"
#include "m2ds2/acoustic/feature-encoder.h"
#include "m2ds2/acoustic/wav2vec-model.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace acoustic {
namespace {

Matrix Randn(Rng *rng, Eigen::Index r, Eigen::Index c) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = StandardNormal(*rng);
  return m;
}

EncoderConfig ToyEncoder() {
  EncoderConfig c;
  c.input_dim = 5;
  c.model_dim = 8;
  c.num_layers = 2;
  c.num_heads = 2;
  c.ffn_dim = 12;
  c.max_positions = 32;
  return c;
}

TEST(FeatureEncoder, FullScaleStride) {
  auto layers = FullScaleConvLayers();
  EXPECT_EQ(ConvOutputLength(16000, layers), 49);
  EXPECT_EQ(ReceptiveField(layers), 400);
  EncoderConfig cfg;
  cfg.synthetic_feature_mode = false;
  cfg.conv_layers = FullScaleConvLayers(4);
  cfg.model_dim = 8;
  ParameterSet ps;
  InitFeatureEncoder(cfg, 1, &ps);
  Rng rng(2);
  Matrix z = FeatureEncode(Randn(&rng, 16000, 1), cfg, ps);
  EXPECT_EQ(z.rows(), 49);
  EXPECT_EQ(z.cols(), 8);
  EXPECT_THROW(FeatureEncode(Randn(&rng, 300, 1), cfg, ps), DataError);
  EXPECT_THROW(FeatureEncode(Matrix(), cfg, ps), DataError);
}

TEST(FeatureEncoder, SyntheticModeKeepsLength) {
  EncoderConfig cfg = ToyEncoder();
  ParameterSet ps;
  InitFeatureEncoder(cfg, 1, &ps);
  Rng rng(3);
  EXPECT_EQ(FeatureEncode(Randn(&rng, 10, 5), cfg, ps).rows(), 10);
  EXPECT_THROW(FeatureEncode(Randn(&rng, 10, 4), cfg, ps), DataError);
  for (size_t i = 0; i < ps.size(); ++i) EXPECT_FALSE(ps[i].trainable) << ps[i].name;
}

TEST(ContextEncoder, SingleStep) {
  EncoderConfig cfg = ToyEncoder();
  ParameterSet ps;
  InitContextEncoder(cfg, 1, &ps);
  Rng rng(4);
  Tape tape(&ps);
  Var c = ContextEncode(tape.Constant(Randn(&rng, 1, 8)), cfg);
  EXPECT_EQ(c.rows(), 1);
  EXPECT_EQ(c.cols(), 8);
  Tape t2(&ps);
  EXPECT_THROW(ContextEncode(t2.Constant(Randn(&rng, 33, 8)), cfg), DataError);
}

TEST(ContextEncoder, PermutationEquivariantWithoutPositions) {
  EncoderConfig cfg = ToyEncoder();
  cfg.use_positions = false;
  ParameterSet ps;
  InitContextEncoder(cfg, 2, &ps);
  Rng rng(5);
  Matrix x = Randn(&rng, 7, 8);
  std::vector<int> perm{3, 0, 6, 1, 5, 2, 4};
  Matrix px(7, 8);
  for (int i = 0; i < 7; ++i) px.row(i) = x.row(perm[i]);
  Tape a(&ps), b(&ps);
  Matrix y = ContextEncode(a.Constant(x), cfg).value();
  Matrix py = ContextEncode(b.Constant(px), cfg).value();
  for (int i = 0; i < 7; ++i) EXPECT_TRUE(py.row(i).isApprox(y.row(perm[i]), 1e-10));
}

TEST(ContextEncoder, GradientMatchesFiniteDifferences) {
  EncoderConfig cfg = ToyEncoder();
  ParameterSet ps;
  InitContextEncoder(cfg, 3, &ps);
  Rng rng(6);
  Matrix x = Randn(&rng, 6, 8), w = Randn(&rng, 6, 8);
  auto loss = [&](const ParameterSet &p, Gradients *g) {
    Tape tape(&p);
    Var l = Sum(CwiseMul(ContextEncode(tape.Constant(x), cfg), tape.Constant(w)));
    if (g) tape.Backward(l, g);
    return l.value()(0, 0);
  };
  Gradients g;
  loss(ps, &g);
  Rng probe(7);
  double err = testing::ParameterGradientError(
      &ps, g, [&](const ParameterSet &p) { return loss(p, nullptr); }, 0, &probe);
  EXPECT_LE(err, 1e-4);
}

TEST(Wav2VecModel, ForwardIsDeterministic) {
  ModelConfig mc;
  mc.encoder = ToyEncoder();
  mc.quantizer.codebook_size = 4;
  mc.quantizer.code_dim = 6;
  mc.vocab_size = 5;
  Wav2VecModel m(mc, 11), m2(mc, 11);
  Rng rng(8);
  Matrix in = Randn(&rng, 9, 5);
  Matrix z = m.Latents(in);
  EXPECT_EQ(z, m2.Latents(in));
  EXPECT_EQ(m.CtcLogProbs(z), m2.CtcLogProbs(z));
  EXPECT_EQ(m.CodeIndices(z), m2.CodeIndices(z));
  auto ssl = [&](const Wav2VecModel &model) {
    Tape tape(&model.params());
    Rng r(3);
    std::vector<bool> mask(9, false);
    mask[2] = mask[3] = true;
    SslForward f = model.ForwardSsl(tape, z, mask, QuantizeMode::kHard, 1.0, &r);
    return std::make_pair(Matrix(f.context.value()), Matrix(f.quant.q.value()));
  };
  EXPECT_EQ(ssl(m), ssl(m2));
  Matrix lp = m.CtcLogProbs(z);
  for (Eigen::Index t = 0; t < lp.rows(); ++t) EXPECT_NEAR(lp.row(t).array().exp().sum(), 1.0, 1e-12);
}

}  // namespace
}  // namespace acoustic
}  // namespace m2ds2
