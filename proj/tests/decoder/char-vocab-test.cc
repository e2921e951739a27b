// tests/decoder/char-vocab-test.cc

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

#include "m2ds2/decoder/char-vocab.h"

#include <gtest/gtest.h>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace decoder {
namespace {

TEST(CharVocab, ReservedLabelsComeFirst) {
  CharVocab v = CharVocab::FromTranscripts({"ab ba", "b c"});
  EXPECT_EQ(v.size(), 6);
  EXPECT_EQ(v.Label("a"), 3);
  EXPECT_EQ(v.Label("b"), 4);
  EXPECT_EQ(v.Label("c"), 5);
  EXPECT_EQ(v.Label("z"), CharVocab::kUnknown);
  EXPECT_EQ(v.Encode("ab ba"), (std::vector<int>{3, 4, 1, 4, 3}));
  EXPECT_EQ(v.Encode("  ab   c "), (std::vector<int>{3, 4, 1, 5}));
  EXPECT_EQ(v.Encode("az"), (std::vector<int>{3, CharVocab::kUnknown}));
}

TEST(CharVocab, DecodeDropsBlanksAndTrims) {
  CharVocab v = CharVocab::FromTranscripts({"ab"});
  EXPECT_EQ(v.Decode({0, 1, 3, 0, 1, 1, 4, 3, 1}), "a ba");
  EXPECT_EQ(v.Decode({}), "");
  EXPECT_EQ(v.Decode(v.Encode("ba ab")), "ba ab");
}

TEST(CharVocab, Utf8Symbols) {
  EXPECT_EQ(SplitUtf8("καλή"), (std::vector<std::string>{"κ", "α", "λ", "ή"}));
  CharVocab v = CharVocab::FromTranscripts({"γεια σου"});
  EXPECT_EQ(v.Decode(v.Encode("σου γεια")), "σου γεια");
  EXPECT_EQ(v.size(), 3 + 7);  // γ ε ι α σ ο υ
}

TEST(CharVocab, FileRoundTrip) {
  CharVocab v = CharVocab::FromTranscripts({"χ y z"});
  std::string path = ::testing::TempDir() + "/vocab.txt";
  v.Write(path);
  CharVocab r = CharVocab::Read(path);
  ASSERT_EQ(r.size(), v.size());
  for (int l = 0; l < v.size(); ++l) EXPECT_EQ(r.Symbol(l), v.Symbol(l));
  EXPECT_THROW(CharVocab::Read(path + ".missing"), DataError);
}

}  // namespace
}  // namespace decoder
}  // namespace m2ds2
