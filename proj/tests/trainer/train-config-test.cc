// tests/trainer/train-config-test.cc

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

#include "m2ds2/trainer/train-config.h"

#include <gtest/gtest.h>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace trainer {
namespace {

TEST(TrainConfig, Defaults) {
  TrainConfig t;
  EXPECT_DOUBLE_EQ(t.weights.alpha, 0.01);
  EXPECT_DOUBLE_EQ(t.weights.beta, 0.02);
  EXPECT_EQ(t.source_batch, 4);
  EXPECT_EQ(t.target_batch, 8);
  EXPECT_EQ(t.AccumulationSteps(), 3);
  EXPECT_NO_THROW(t.Check());
  t.target_batch = 6;
  EXPECT_THROW(t.Check(), ConfigError);
}

TEST(TrainConfig, MapRoundTrip) {
  TrainConfig t;
  acoustic::ModelConfig m = DefaultModelConfig(16, 30);
  t.peak_lr = 1.25e-3;
  t.weights.alpha = 0.0;
  t.ssl.quantize_mode = acoustic::QuantizeMode::kSoft;
  m.encoder.use_positions = false;
  m.quantizer.codebook_size = 16;
  auto kv = ConfigToMap(t, m);
  EXPECT_EQ(kv.at("model.positions"), "false");
  EXPECT_EQ(kv.at("quantize_mode"), "soft");
  TrainConfig t2;
  acoustic::ModelConfig m2 = DefaultModelConfig(16, 30);
  ApplyConfig(kv, &t2, &m2);
  EXPECT_EQ(ConfigToMap(t2, m2), kv);
  EXPECT_DOUBLE_EQ(t2.peak_lr, 1.25e-3);
  EXPECT_EQ(m2.quantizer.codebook_size, 16);
}

TEST(TrainConfig, RejectsUnknownAndMalformed) {
  TrainConfig t;
  acoustic::ModelConfig m;
  EXPECT_THROW(ApplyConfig({{"learning_rate", "1"}}, &t, &m), ConfigError);
  EXPECT_THROW(ApplyConfig({{"lr", "fast"}}, &t, &m), ConfigError);
  EXPECT_THROW(ApplyConfig({{"model.positions", "maybe"}}, &t, &m), ConfigError);
  EXPECT_THROW(ApplyConfig({{"quantize_mode", "fuzzy"}}, &t, &m), ConfigError);
}

TEST(TrainConfig, FileRoundTrip) {
  std::string path = ::testing::TempDir() + "/train.conf";
  WriteLines(path, {"# comment", "lr = 0.002  # trailing", "", "max_steps=300"});
  auto kv = ReadConfigFile(path);
  EXPECT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("lr"), "0.002");
  EXPECT_EQ(kv.at("max_steps"), "300");
  std::string out = ::testing::TempDir() + "/train2.conf";
  WriteConfigFile(kv, out);
  EXPECT_EQ(ReadConfigFile(out), kv);
  WriteLines(path, {"lr 0.1"});
  EXPECT_THROW(ReadConfigFile(path), ConfigError);
}

TEST(TrainMode, Names) {
  for (TrainMode m : {TrainMode::kSourceOnly, TrainMode::kM2ds2, TrainMode::kCptPretrain,
                      TrainMode::kCptFinetune, TrainMode::kPseudoLabel})
    EXPECT_EQ(ParseTrainMode(TrainModeName(m)), m);
  EXPECT_THROW(ParseTrainMode("bogus"), ConfigError);
}

}  // namespace
}  // namespace trainer
}  // namespace m2ds2
