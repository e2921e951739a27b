// tests/common/oracles.h

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

#ifndef M2DS2_TESTS_COMMON_ORACLES_H_
#define M2DS2_TESTS_COMMON_ORACLES_H_

// Brute-force reference implementations used by the unit tests and the
// acceptance checks.  They share no code with the library beyond plain data
// types; speed is irrelevant here, only obviousness.

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "m2ds2/acoustic/tape.h"
#include "m2ds2/alignpipe/smith-waterman.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace testing {

// -ln of the total probability of every frame path that collapses to
// target, by enumerating all labels^T paths.
double CtcByEnumeration(const Eigen::MatrixXd &log_probs, const std::vector<int> &target,
                        int blank = 0);

// Every distinct collapsed label sequence reachable in T frames over the
// given number of labels, with its log marginal (natural log).
std::map<std::vector<int>, double> CollapsedMarginals(const Eigen::MatrixXd &log_probs,
                                                      int blank = 0);

// Backoff LM read straight from ARPA text into string-keyed maps, with the
// textbook recursion P(w|h) = P*(w|h) if (h,w) is listed, else
// bow(h) * P(w|h') with h' the history minus its first word.
class NaiveBackoffLm {
 public:
  explicit NaiveBackoffLm(const std::string &arpa_text);
  int order() const { return order_; }
  // log10 P(word | history), history possibly longer than order - 1.
  double LogProb(std::vector<std::string> history, const std::string &word) const;
  // Total log10 probability of "<s> tokens </s>" with unlisted words scored
  // as <unk>.
  double SentenceLogProb(const std::vector<std::string> &tokens) const;
  double Perplexity(const std::vector<std::string> &tokens) const;
  bool Knows(const std::string &word) const;

 private:
  struct Entry {
    double prob = 0.0;
    double backoff = 0.0;
  };
  std::map<std::string, Entry> entries_;  // key: words joined by ' '
  int order_ = 0;
};

// Textbook local alignment score by the O(nm) recurrence.
double SwScoreDp(const std::vector<std::string> &hyp, const std::vector<std::string> &ref,
                 const alignpipe::SwParams &p);

// Global alignment score by the O(nm) recurrence.
double NwScore(const std::vector<std::string> &a, const std::vector<std::string> &b,
               const alignpipe::SwParams &p);

// Best local alignment found by scoring every substring pair globally.
// Among equal scores the smallest (ref_begin, hyp_begin) wins, then the
// largest (ref_end, hyp_end); an all-negative problem yields the empty
// alignment with score 0.
alignpipe::SwAlignment SwBruteForce(const std::vector<std::string> &hyp,
                                    const std::vector<std::string> &ref,
                                    const alignpipe::SwParams &p);

// Relative error between two gradient vectors, ||a - b|| / max(||a||, ||b||),
// 0 when both vanish.
double RelativeError(const Eigen::VectorXd &a, const Eigen::VectorXd &b);

// Central-difference check of the trainable parameters of `params`.
// loss(params) is evaluated at +-h along `probes` randomly chosen scalar
// coordinates (all of them when probes <= 0); returns the relative error
// between the analytic and numeric derivatives over those coordinates.
double ParameterGradientError(acoustic::ParameterSet *params, const acoustic::Gradients &analytic,
                              const std::function<double(const acoustic::ParameterSet &)> &loss,
                              int probes, Rng *rng, double h = 1e-5);

// Same for a plain matrix argument.
double MatrixGradientError(const Eigen::MatrixXd &x, const Eigen::MatrixXd &analytic,
                           const std::function<double(const Eigen::MatrixXd &)> &f,
                           double h = 1e-5);

// Rows of log-probabilities from standard-normal logits.
Eigen::MatrixXd RandomLogProbs(int T, int labels, Rng *rng, double scale = 1.0);

}  // namespace testing
}  // namespace m2ds2

#endif  // M2DS2_TESTS_COMMON_ORACLES_H_
