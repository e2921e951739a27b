// metrics/wer.h

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

#ifndef M2DS2_METRICS_WER_H_
#define M2DS2_METRICS_WER_H_

#include <string>
#include <vector>

namespace m2ds2 {
namespace metrics {

struct EditCounts {
  long long substitutions = 0;
  long long insertions = 0;
  long long deletions = 0;
  long long Errors() const { return substitutions + insertions + deletions; }
};

struct EvalResult {
  double wer = 0.0;  // percentage
  long long substitutions = 0;
  long long insertions = 0;
  long long deletions = 0;
  long long n_ref_words = 0;
};

// Minimal word edit script between ref and hyp with uniform costs.  Among
// minimal scripts the one with the most substitutions is preferred, then
// fewest deletions, so the split into S/I/D is deterministic.
EditCounts AlignWords(const std::vector<std::string> &ref,
                      const std::vector<std::string> &hyp);

// Corpus-level WER over whitespace-tokenized lines.  Throws ConfigError for
// mismatched list lengths and DataError when refs hold no words at all.
EvalResult ComputeWer(const std::vector<std::string> &refs,
                      const std::vector<std::string> &hyps);

// Relative adaptation improvement, percent; positive when adaptation helps.
double Rai(double wer_adapted, double wer_unadapted);

// One-line human-readable summary.
std::string FormatEvalResult(const EvalResult &r);

}  // namespace metrics
}  // namespace m2ds2

#endif  // M2DS2_METRICS_WER_H_
