// tests/alignpipe/chunking-test.cc

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

#include "m2ds2/alignpipe/chunking.h"

#include <gtest/gtest.h>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace alignpipe {
namespace {

void ExpectSpans(const std::vector<TimeSpan> &got, const std::vector<std::pair<double, double>> &want) {
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    EXPECT_DOUBLE_EQ(got[i].start, want[i].first);
    EXPECT_DOUBLE_EQ(got[i].end, want[i].second);
  }
}

TEST(ChunkAudio, Arithmetic) {
  ExpectSpans(ChunkAudio(95, 30), {{0, 30}, {30, 60}, {60, 90}, {90, 95}});
  ExpectSpans(ChunkAudio(30, 30), {{0, 30}});
  ExpectSpans(ChunkAudio(29, 30), {{0, 29}});
  EXPECT_THROW(ChunkAudio(0, 30), ConfigError);
  EXPECT_THROW(ChunkAudio(10, -1), ConfigError);
}

TEST(SplitDocuments, Sizes) {
  std::vector<std::string> words(2500, "λ");
  auto docs = SplitDocuments(words, 1000);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].tokens.size(), 1000u);
  EXPECT_EQ(docs[2].tokens.size(), 500u);
  EXPECT_EQ(docs[2].source_offset, 2000u);
  EXPECT_EQ(SplitDocuments(std::vector<std::string>(1000, "x"), 1000).size(), 1u);
  auto one = SplitDocuments({"x"}, 1000);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].tokens.size(), 1u);
  EXPECT_THROW(SplitDocuments({}, 1000), DataError);
}

TEST(ChunkHypotheses, FileRoundTrip) {
  std::vector<AudioChunk> chunks(2);
  chunks[0] = {"r1", 0.0, 30.0, std::vector<std::string>{"ενα", "δυο"}};
  chunks[1] = {"r1", 30.0, 41.5, std::nullopt};
  std::string path = ::testing::TempDir() + "/chunks.jsonl";
  WriteChunkHypotheses(chunks, path);
  auto r = ReadChunkHypotheses(path);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(*r[0].hypothesis, *chunks[0].hypothesis);
  EXPECT_FALSE(r[1].hypothesis.has_value());
  EXPECT_DOUBLE_EQ(r[1].end, 41.5);
}

}  // namespace
}  // namespace alignpipe
}  // namespace m2ds2
