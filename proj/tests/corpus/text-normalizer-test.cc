// tests/corpus/text-normalizer-test.cc

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

#include "m2ds2/corpus/text-normalizer.h"

#include <gtest/gtest.h>

#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace corpus {
namespace {

TEST(NormalizeText, Examples) {
  EXPECT_EQ(NormalizeText("Καλημέρα,  Κόσμε!"), "καλημερα κοσμε");
  EXPECT_EQ(NormalizeText(""), "");
  EXPECT_EQ(NormalizeText("Ένα   ΔΥΟ τρία."), "ενα δυο τρια");
}

TEST(NormalizeText, DiacriticsAndFinalSigma) {
  EXPECT_EQ(NormalizeText("ΪΫ ϊΰ"), "ιυ ιυ");
  EXPECT_EQ(NormalizeText("ΟΔΟΣ"), "οδος");
  EXPECT_EQ(NormalizeText("  \t leading and trailing \n"), "leading and trailing");
}

TEST(NormalizeText, Idempotent) {
  const std::vector<std::string> pieces{"Ά", "έ", "Ή", "ί", "ΰ", " ", "  ", ",", ".", "!", ";",
                                        "a", "B", "ç", "Ω", "σ", "ς", "ΐ", "«", "»", "-",
                                        "\t", "1", "Ö"};
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    int n = static_cast<int>(UniformIndex(rng, 20));
    for (int i = 0; i < n; ++i) s += pieces[UniformIndex(rng, pieces.size())];
    std::string once = NormalizeText(s);
    EXPECT_EQ(NormalizeText(once), once) << s;
  }
}

}  // namespace
}  // namespace corpus
}  // namespace m2ds2
