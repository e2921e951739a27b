// ngram/kneser-ney.cc

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

#include "m2ds2/ngram/kneser-ney.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace ngram {

Discounts ComputeDiscounts(const std::array<int64_t, 4> &n) {
  Discounts out;
  for (int64_t v : n)
    if (v == 0) return out;
  const double y = static_cast<double>(n[0]) / (n[0] + 2.0 * n[1]);
  for (int k = 1; k <= 3; ++k) {
    double dk = k - (k + 1) * y * static_cast<double>(n[k]) / static_cast<double>(n[k - 1]);
    if (!(dk >= 0.0 && dk <= k)) return Discounts{};
    out.d[k - 1] = dk;
  }
  out.fallback = false;
  return out;
}

namespace {

struct HistoryStats {
  double total = 0.0;      // sum of adjusted counts of stored children
  double discounted = 0.0; // sum of discounts applied to them
};

}  // namespace

NGramModel EstimateKneserNey(const NGramCounts &c, std::vector<Discounts> *discounts_out) {
  if (c.order < 1 || c.counts.empty() || c.counts[0].empty())
    throw DataError("cannot estimate a model from empty counts");
  const int order = c.order;

  // Adjusted counts per order.
  std::vector<NGramMap<int64_t>> adjusted(order);
  for (int n = 1; n <= order; ++n) {
    for (const auto &kv : c.counts[n - 1]) {
      int64_t a = kv.second;
      if (n < order && kv.first[0] != Vocabulary::kBosId) {
        auto it = c.left_extensions[n - 1].find(kv.first);
        a = it == c.left_extensions[n - 1].end() ? 0 : it->second;
      }
      if (a > 0) adjusted[n - 1].emplace(kv.first, a);
    }
  }

  std::vector<Discounts> discounts(order);
  for (int n = 1; n <= order; ++n) {
    std::array<int64_t, 4> coc{0, 0, 0, 0};
    for (const auto &kv : adjusted[n - 1])
      if (kv.second <= 4) ++coc[kv.second - 1];
    discounts[n - 1] = ComputeDiscounts(coc);
  }
  if (discounts_out) *discounts_out = discounts;

  NGramModel model(order, c.vocab);
  // Vocabulary::Intern never adds <unk> to counts; it always exists as id 2.

  // Per-history sums; key is the history (length n-1).
  std::vector<NGramMap<HistoryStats>> stats(order);
  for (int n = 1; n <= order; ++n) {
    const Discounts &d = discounts[n - 1];
    for (const auto &kv : adjusted[n - 1]) {
      NGram h(kv.first.begin(), kv.first.end() - 1);
      auto &s = stats[n - 1][h];
      s.total += static_cast<double>(kv.second);
      s.discounted += d.For(kv.second);
    }
  }

  // Unigrams.  Predicted vocabulary: every word except <s>.
  const size_t predicted_vocab = c.vocab.size() - 1;
  {
    const HistoryStats &s = stats[0][NGram{}];
    const double gamma = s.discounted / s.total;
    const Discounts &d = discounts[0];
    auto &table = model.mutable_table(1);
    for (WordId w = 0; w < static_cast<WordId>(c.vocab.size()); ++w) {
      NGramEntry e;
      if (w == Vocabulary::kBosId) {
        e.log_prob = kLogZero;
      } else {
        auto it = adjusted[0].find(NGram{w});
        double own = 0.0;
        if (it != adjusted[0].end())
          own = (static_cast<double>(it->second) - d.For(it->second)) / s.total;
        e.log_prob = std::log10(own + gamma / static_cast<double>(predicted_vocab));
      }
      table.emplace(NGram{w}, e);
    }
  }

  // Higher orders, increasing.  The lower-order term uses the already
  // written lower tables through the backoff recursion.
  for (int n = 2; n <= order; ++n) {
    const Discounts &d = discounts[n - 1];
    auto &table = model.mutable_table(n);
    // Backoff weights of the histories (order n-1 entries).
    auto &hist_table = model.mutable_table(n - 1);
    for (const auto &kv : stats[n - 1]) {
      const double gamma = kv.second.discounted / kv.second.total;
      auto it = hist_table.find(kv.first);
      if (it == hist_table.end()) {
        // History missing from the lower table (cannot happen for counts
        // closed under prefixes); give it an entry so the weight is usable.
        NGramEntry e;
        e.log_prob = kLogZero;
        it = hist_table.emplace(kv.first, e).first;
      }
      it->second.log_backoff = std::log10(gamma);
    }
    for (const auto &kv : adjusted[n - 1]) {
      NGram h(kv.first.begin(), kv.first.end() - 1);
      const HistoryStats &s = stats[n - 1].at(h);
      const double gamma = s.discounted / s.total;
      std::vector<WordId> lower_hist(h.begin() + 1, h.end());
      const double lower = std::pow(10.0, model.LogProb(lower_hist, kv.first.back()));
      const double own = (static_cast<double>(kv.second) - d.For(kv.second)) / s.total;
      NGramEntry e;
      e.log_prob = std::log10(own + gamma * lower);
      table.emplace(kv.first, e);
    }
  }
  return model;
}

}  // namespace ngram
}  // namespace m2ds2
