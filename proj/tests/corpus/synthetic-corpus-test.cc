// tests/corpus/synthetic-corpus-test.cc

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

#include "m2ds2/corpus/synthetic-corpus.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "m2ds2/base/error.h"
#include "m2ds2/corpus/dataset.h"
#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace corpus {
namespace {

SyntheticConfig Small() {
  SyntheticConfig c;
  c.source_train = 20;
  c.source_dev = 5;
  c.target_train = 20;
  c.target_dev = 5;
  c.target_test = 5;
  return c;
}

TEST(SyntheticCorpus, ShapesAndDomains) {
  SyntheticConfig cfg = Small();
  SyntheticCorpus c = GenerateSyntheticCorpus(cfg);
  EXPECT_EQ(c.lexicon.size(), static_cast<size_t>(cfg.lexicon_size));
  EXPECT_EQ(c.source_train.size(), 20u);
  EXPECT_EQ(c.target_test.size(), 5u);
  EXPECT_EQ(c.target_train_gold.size(), c.target_train.size());
  for (size_t i = 0; i < c.source_train.size(); ++i) {
    EXPECT_EQ(c.source_train.inputs[i].cols(), cfg.input_dim());
    EXPECT_EQ(c.source_train.manifest[i].domain, Domain::kSource);
    EXPECT_TRUE(c.source_train.manifest[i].IsLabeled());
  }
  for (size_t i = 0; i < c.target_train.size(); ++i) {
    EXPECT_EQ(c.target_train.manifest[i].domain, Domain::kTarget);
    EXPECT_FALSE(c.target_train.manifest[i].IsLabeled());
  }
  EXPECT_TRUE(c.target_dev.manifest[0].IsLabeled());
}

TEST(SyntheticCorpus, WordsHaveNoRepeatedLetters) {
  SyntheticCorpus c = GenerateSyntheticCorpus(Small());
  for (const auto &w : c.lexicon)
    for (size_t i = 1; i < w.size(); ++i) EXPECT_NE(w[i], w[i - 1]) << w;
}

TEST(SyntheticCorpus, DeterministicInSeed) {
  SyntheticConfig cfg = Small();
  SyntheticCorpus a = GenerateSyntheticCorpus(cfg), b = GenerateSyntheticCorpus(cfg);
  EXPECT_EQ(ManifestToString(a.source_train.manifest), ManifestToString(b.source_train.manifest));
  for (size_t i = 0; i < a.target_train.size(); ++i)
    EXPECT_EQ(a.target_train.inputs[i], b.target_train.inputs[i]);
  cfg.seed = 2;
  SyntheticCorpus d = GenerateSyntheticCorpus(cfg);
  EXPECT_NE(ManifestToString(a.source_train.manifest), ManifestToString(d.source_train.manifest));
}

TEST(SyntheticCorpus, WrittenCorpusLoadsBack) {
  SyntheticCorpus c = GenerateSyntheticCorpus(Small());
  std::string dir = ::testing::TempDir() + "/synth";
  std::filesystem::remove_all(dir);
  WriteSyntheticCorpus(c, dir);
  Dataset d = LoadDataset(ReadManifest(dir + "/source_train.jsonl"));
  ASSERT_EQ(d.size(), c.source_train.size());
  for (size_t i = 0; i < d.size(); ++i) EXPECT_TRUE(d.inputs[i].isApprox(c.source_train.inputs[i]));
}

TEST(SyntheticCorpus, RejectsBadConfig) {
  SyntheticConfig cfg = Small();
  cfg.num_chars = 1;
  EXPECT_THROW(GenerateSyntheticCorpus(cfg), ConfigError);
}

}  // namespace
}  // namespace corpus
}  // namespace m2ds2
