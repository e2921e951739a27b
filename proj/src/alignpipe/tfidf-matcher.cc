// alignpipe/tfidf-matcher.cc

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

#include <cmath>
#include <unordered_set>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace alignpipe {

TfidfIndex::TfidfIndex(const std::vector<Document> &docs) {
  if (docs.empty()) throw DataError("TF-IDF index needs at least one document");
  num_docs_ = docs.size();
  for (const auto &d : docs) {
    std::unordered_set<std::string> seen(d.tokens.begin(), d.tokens.end());
    for (const auto &t : seen) ++df_[t];
  }
  doc_vectors_.reserve(docs.size());
  for (const auto &d : docs) {
    doc_vectors_.push_back(Weight(d.tokens));
    double sq = 0.0;
    for (const auto &kv : doc_vectors_.back()) sq += kv.second * kv.second;
    doc_norms_.push_back(std::sqrt(sq));
  }
}

double TfidfIndex::Idf(const std::string &term) const {
  auto it = df_.find(term);
  double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
  double n = static_cast<double>(num_docs_);
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

TfidfIndex::SparseVector TfidfIndex::Weight(const std::vector<std::string> &tokens) const {
  SparseVector tf;
  for (const auto &t : tokens) tf[t] += 1.0;
  for (auto &kv : tf) kv.second *= Idf(kv.first);
  return tf;
}

std::vector<double> TfidfIndex::Similarities(const std::vector<std::string> &hypothesis) const {
  if (hypothesis.empty()) throw DataError("empty hypothesis");
  SparseVector h = Weight(hypothesis);
  double hn = 0.0;
  for (const auto &kv : h) hn += kv.second * kv.second;
  hn = std::sqrt(hn);
  std::vector<double> sims(doc_vectors_.size(), 0.0);
  for (size_t i = 0; i < doc_vectors_.size(); ++i) {
    if (doc_norms_[i] == 0.0 || hn == 0.0) continue;
    double dot = 0.0;
    for (const auto &kv : h) {
      auto it = doc_vectors_[i].find(kv.first);
      if (it != doc_vectors_[i].end()) dot += kv.second * it->second;
    }
    sims[i] = dot / (hn * doc_norms_[i]);
  }
  return sims;
}

TfidfMatch TfidfIndex::Match(const std::vector<std::string> &hypothesis) const {
  auto sims = Similarities(hypothesis);
  TfidfMatch best;
  best.similarity = sims[0];
  for (size_t i = 1; i < sims.size(); ++i) {
    if (sims[i] > best.similarity) {
      best.similarity = sims[i];
      best.doc_index = i;
    }
  }
  best.zero_similarity = !(best.similarity > 0.0);
  return best;
}

TfidfMatch MatchDocument(const std::vector<std::string> &hypothesis,
                         const std::vector<Document> &docs) {
  return TfidfIndex(docs).Match(hypothesis);
}

}  // namespace alignpipe
}  // namespace m2ds2
