// alignpipe/smith-waterman.cc

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

#include "m2ds2/alignpipe/smith-waterman.h"

#include <algorithm>
#include <limits>
#include <tuple>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace alignpipe {

void SwParams::Check() const {
  if (!(match > 0.0) || mismatch > 0.0 || gap > 0.0)
    throw ConfigError("Smith-Waterman needs match > 0 and mismatch, gap <= 0");
}

namespace {

// Best score of a path ending at a cell whose every prefix is nonnegative,
// together with the smallest start among paths attaining it.
struct Cell {
  double score = -std::numeric_limits<double>::infinity();
  size_t ref_start = 0, hyp_start = 0;
  bool valid() const { return score != -std::numeric_limits<double>::infinity(); }
};

inline bool Better(double s, size_t rs, size_t hs, const Cell &c) {
  if (!c.valid()) return true;
  if (s != c.score) return s > c.score;
  return std::tie(rs, hs) < std::tie(c.ref_start, c.hyp_start);
}

inline void Offer(Cell *c, double s, size_t rs, size_t hs) {
  if (s < 0.0) return;
  if (Better(s, rs, hs, *c)) *c = Cell{s, rs, hs};
}

}  // namespace

SwAlignment SmithWaterman(const std::vector<std::string> &hyp,
                          const std::vector<std::string> &ref,
                          const SwParams &params) {
  params.Check();
  const size_t n = hyp.size(), m = ref.size();
  SwAlignment best;
  if (n == 0 || m == 0) return best;
  // Row-rolling DP; cell (i, j) covers hyp[0..i) and ref[0..j).
  std::vector<Cell> prev(m + 1), cur(m + 1);
  bool have = false;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = Cell();
    for (size_t j = 1; j <= m; ++j) {
      Cell c;
      double s = hyp[i - 1] == ref[j - 1] ? params.match : params.mismatch;
      Offer(&c, s, j - 1, i - 1);
      const Cell &d = prev[j - 1];
      if (d.valid()) Offer(&c, d.score + s, d.ref_start, d.hyp_start);
      const Cell &u = prev[j];
      if (u.valid()) Offer(&c, u.score + params.gap, u.ref_start, u.hyp_start);
      const Cell &l = cur[j - 1];
      if (l.valid()) Offer(&c, l.score + params.gap, l.ref_start, l.hyp_start);
      cur[j] = c;
      // Equal scores prefer the earliest start, then the furthest end, so
      // zero-sum stretches between matches stay inside the alignment.
      if (c.valid() && c.score > 0.0) {
        bool better = !have || c.score > best.score;
        if (have && c.score == best.score)
          better = std::make_tuple(c.ref_start, c.hyp_start, best.ref_end, best.hyp_end) <
                   std::make_tuple(best.ref_begin, best.hyp_begin, j, i);
        if (better) {
          best = SwAlignment{c.hyp_start, i, c.ref_start, j, c.score};
          have = true;
        }
      }
    }
    std::swap(prev, cur);
  }
  return have ? best : SwAlignment();
}

double GlobalAlignmentScore(const std::vector<std::string> &a,
                            const std::vector<std::string> &b,
                            const SwParams &params) {
  const size_t n = a.size(), m = b.size();
  std::vector<double> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = params.gap * static_cast<double>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = params.gap * static_cast<double>(i);
    for (size_t j = 1; j <= m; ++j) {
      double s = a[i - 1] == b[j - 1] ? params.match : params.mismatch;
      cur[j] = std::max({prev[j - 1] + s, prev[j] + params.gap, cur[j - 1] + params.gap});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace alignpipe
}  // namespace m2ds2
