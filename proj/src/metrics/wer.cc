// metrics/wer.cc

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

#include "m2ds2/metrics/wer.h"

#include <sstream>
#include <tuple>

#include "m2ds2/base/error.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace metrics {

EditCounts AlignWords(const std::vector<std::string> &ref,
                      const std::vector<std::string> &hyp) {
  // Cost tuples compare total errors first, then prefer the script with
  // more substitutions and fewer deletions.
  struct Cost {
    long long total = 0, neg_sub = 0, del = 0;
    EditCounts counts;
    bool operator<(const Cost &o) const {
      return std::tie(total, neg_sub, del) < std::tie(o.total, o.neg_sub, o.del);
    }
  };
  const size_t n = ref.size(), m = hyp.size();
  std::vector<Cost> prev(m + 1), cur(m + 1);
  for (size_t j = 1; j <= m; ++j) {
    prev[j] = prev[j - 1];
    prev[j].total += 1;
    prev[j].counts.insertions += 1;
  }
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = prev[0];
    cur[0].total += 1;
    cur[0].del += 1;
    cur[0].counts.deletions += 1;
    for (size_t j = 1; j <= m; ++j) {
      Cost diag = prev[j - 1];
      if (ref[i - 1] != hyp[j - 1]) {
        diag.total += 1;
        diag.neg_sub -= 1;
        diag.counts.substitutions += 1;
      }
      Cost del = prev[j];
      del.total += 1;
      del.del += 1;
      del.counts.deletions += 1;
      Cost ins = cur[j - 1];
      ins.total += 1;
      ins.counts.insertions += 1;
      Cost best = diag;
      if (del < best) best = del;
      if (ins < best) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m].counts;
}

EvalResult ComputeWer(const std::vector<std::string> &refs,
                      const std::vector<std::string> &hyps) {
  if (refs.size() != hyps.size())
    throw ConfigError("reference and hypothesis counts differ: " + std::to_string(refs.size()) +
                      " vs " + std::to_string(hyps.size()));
  std::vector<EditCounts> per(refs.size());
  std::vector<long long> nref(refs.size());
  ParallelFor(refs.size(), [&](size_t i) {
    auto r = SplitTokens(refs[i]);
    per[i] = AlignWords(r, SplitTokens(hyps[i]));
    nref[i] = static_cast<long long>(r.size());
  });
  EvalResult res;
  for (size_t i = 0; i < per.size(); ++i) {
    res.substitutions += per[i].substitutions;
    res.insertions += per[i].insertions;
    res.deletions += per[i].deletions;
    res.n_ref_words += nref[i];
  }
  if (res.n_ref_words == 0) throw DataError("references contain no words");
  res.wer = 100.0 * static_cast<double>(res.substitutions + res.insertions + res.deletions) /
            static_cast<double>(res.n_ref_words);
  return res;
}

double Rai(double wer_adapted, double wer_unadapted) {
  if (!(wer_unadapted > 0.0)) throw ConfigError("unadapted WER must be positive");
  return -(wer_adapted - wer_unadapted) / wer_unadapted * 100.0;
}

std::string FormatEvalResult(const EvalResult &r) {
  std::ostringstream os;
  os << "%WER " << FormatFixed(r.wer, 2) << " [ "
     << (r.substitutions + r.insertions + r.deletions) << " / " << r.n_ref_words << ", "
     << r.insertions << " ins, " << r.deletions << " del, " << r.substitutions << " sub ]";
  return os.str();
}

}  // namespace metrics
}  // namespace m2ds2
