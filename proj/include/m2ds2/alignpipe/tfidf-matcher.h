// alignpipe/tfidf-matcher.h

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

#ifndef M2DS2_ALIGNPIPE_TFIDF_MATCHER_H_
#define M2DS2_ALIGNPIPE_TFIDF_MATCHER_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "m2ds2/alignpipe/chunking.h"

namespace m2ds2 {
namespace alignpipe {

struct TfidfMatch {
  size_t doc_index = 0;
  double similarity = 0.0;
  bool zero_similarity = true;
};

// TF-IDF vectors over a fixed document collection: raw term frequency,
// smoothed idf = ln((1 + N) / (1 + df)) + 1, cosine similarity.
class TfidfIndex {
 public:
  explicit TfidfIndex(const std::vector<Document> &docs);

  // Best document for the hypothesis; ties go to the lowest index.  Throws
  // DataError for an empty hypothesis.
  TfidfMatch Match(const std::vector<std::string> &hypothesis) const;
  // Cosine similarity against every document.
  std::vector<double> Similarities(const std::vector<std::string> &hypothesis) const;

  double Idf(const std::string &term) const;
  size_t num_docs() const { return doc_vectors_.size(); }

 private:
  using SparseVector = std::unordered_map<std::string, double>;
  SparseVector Weight(const std::vector<std::string> &tokens) const;

  std::unordered_map<std::string, size_t> df_;
  std::vector<SparseVector> doc_vectors_;
  std::vector<double> doc_norms_;
  size_t num_docs_ = 0;
};

// Convenience wrapper building a throwaway index.
TfidfMatch MatchDocument(const std::vector<std::string> &hypothesis,
                         const std::vector<Document> &docs);

}  // namespace alignpipe
}  // namespace m2ds2

#endif  // M2DS2_ALIGNPIPE_TFIDF_MATCHER_H_
