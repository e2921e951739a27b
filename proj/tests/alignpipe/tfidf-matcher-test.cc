// tests/alignpipe/tfidf-matcher-test.cc

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

#include "m2ds2/alignpipe/tfidf-matcher.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace alignpipe {
namespace {

Document Doc(const std::string &id, std::vector<std::string> tokens) {
  return Document{id, std::move(tokens), 0};
}

// Dense TF-IDF cosine over the union vocabulary.
std::vector<double> DenseCosines(const std::vector<std::string> &hyp,
                                 const std::vector<Document> &docs) {
  std::set<std::string> vocab(hyp.begin(), hyp.end());
  for (const auto &d : docs) vocab.insert(d.tokens.begin(), d.tokens.end());
  const double n = static_cast<double>(docs.size());
  std::map<std::string, double> idf;
  for (const auto &t : vocab) {
    double df = 0;
    for (const auto &d : docs) df += std::count(d.tokens.begin(), d.tokens.end(), t) > 0;
    idf[t] = std::log((1 + n) / (1 + df)) + 1;
  }
  auto vec = [&](const std::vector<std::string> &toks) {
    std::vector<double> v;
    for (const auto &t : vocab) v.push_back(std::count(toks.begin(), toks.end(), t) * idf[t]);
    return v;
  };
  auto hv = vec(hyp);
  std::vector<double> out;
  for (const auto &d : docs) {
    auto dv = vec(d.tokens);
    double dot = 0, a = 0, b = 0;
    for (size_t i = 0; i < hv.size(); ++i) dot += hv[i] * dv[i], a += hv[i] * hv[i], b += dv[i] * dv[i];
    out.push_back(a > 0 && b > 0 ? dot / std::sqrt(a * b) : 0.0);
  }
  return out;
}

TEST(TfidfMatch, ExactDocumentWins) {
  std::vector<Document> docs;
  for (int d = 0; d < 5; ++d) {
    std::vector<std::string> t;
    for (int k = 0; k < 6; ++k) t.push_back("d" + std::to_string(d) + "w" + std::to_string(k));
    docs.push_back(Doc("doc" + std::to_string(d), t));
  }
  TfidfMatch m = MatchDocument(docs[3].tokens, docs);
  EXPECT_EQ(m.doc_index, 3u);
  EXPECT_NEAR(m.similarity, 1.0, 1e-12);
  EXPECT_FALSE(m.zero_similarity);
}

TEST(TfidfMatch, DisjointHypothesisFlagsZeroSimilarity) {
  std::vector<Document> docs{Doc("a", {"x", "y"}), Doc("b", {"z"})};
  TfidfMatch m = MatchDocument({"q", "r"}, docs);
  EXPECT_EQ(m.doc_index, 0u);
  EXPECT_EQ(m.similarity, 0.0);
  EXPECT_TRUE(m.zero_similarity);
  EXPECT_THROW(MatchDocument({}, docs), DataError);
}

TEST(TfidfMatch, MatchesDenseOracle) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Document> docs;
    for (int d = 0; d < 5; ++d) {
      std::vector<std::string> t;
      int len = 1 + static_cast<int>(UniformIndex(rng, 12));
      for (int k = 0; k < len; ++k) t.push_back("w" + std::to_string(UniformIndex(rng, 10)));
      docs.push_back(Doc("d" + std::to_string(d), t));
    }
    std::vector<std::string> hyp;
    int len = 1 + static_cast<int>(UniformIndex(rng, 8));
    for (int k = 0; k < len; ++k) hyp.push_back("w" + std::to_string(UniformIndex(rng, 12)));
    auto oracle = DenseCosines(hyp, docs);
    TfidfIndex index(docs);
    auto sims = index.Similarities(hyp);
    ASSERT_EQ(sims.size(), oracle.size());
    for (size_t i = 0; i < sims.size(); ++i) EXPECT_NEAR(sims[i], oracle[i], 1e-12);
    size_t best = std::max_element(oracle.begin(), oracle.end()) - oracle.begin();
    TfidfMatch m = index.Match(hyp);
    EXPECT_NEAR(m.similarity, oracle[best], 1e-12);
    EXPECT_NEAR(oracle[m.doc_index], oracle[best], 1e-12);
  }
}

}  // namespace
}  // namespace alignpipe
}  // namespace m2ds2
