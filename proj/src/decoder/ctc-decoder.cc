// decoder/ctc-decoder.cc

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

#include "m2ds2/decoder/ctc-decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace decoder {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLn10 = std::log(10.0);

inline double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

void CheckShape(const Eigen::MatrixXd &log_probs, const CharVocab &vocab) {
  if (log_probs.cols() != vocab.size())
    throw ConfigError("log-prob matrix has " + std::to_string(log_probs.cols()) +
                      " columns, vocabulary has " + std::to_string(vocab.size()));
}

struct Prefix {
  std::vector<int> labels;
  double pb = kNegInf, pnb = kNegInf;
  // Best single path ending in blank / non-blank; used for pruning.
  double vb = kNegInf, vnb = kNegInf;
  double lm = 0.0;  // natural log
  int words = 0;
  std::vector<ngram::WordId> state;
  std::string partial;

  double Acoustic() const { return LogAdd(pb, pnb); }
  double BestPath() const { return std::max(vb, vnb); }
};

inline void Raise(double *v, double x) { *v = std::max(*v, x); }

double Combined(double acoustic, double lm, int words, const DecodeConfig &cfg) {
  return acoustic + cfg.lm_weight * lm + cfg.word_bonus * static_cast<double>(words);
}

// Completes the pending word and scores the sentence end.
void Finish(const ngram::NGramModel *lm, Prefix *p) {
  if (!p->partial.empty()) {
    if (lm) p->lm += lm->ScoreWord(p->state, p->partial) * kLn10;
    ++p->words;
    p->partial.clear();
  }
  if (lm) p->lm += lm->ScoreEnd(p->state) * kLn10;
}

Prefix Extend(const Prefix &p, int label, const CharVocab &vocab, const ngram::NGramModel *lm) {
  Prefix q;
  q.labels = p.labels;
  q.labels.push_back(label);
  q.lm = p.lm;
  q.words = p.words;
  q.state = p.state;
  q.partial = p.partial;
  if (label == CharVocab::kDelimiter) {
    if (!q.partial.empty()) {
      if (lm) q.lm += lm->ScoreWord(q.state, q.partial) * kLn10;
      ++q.words;
      q.partial.clear();
    }
  } else {
    q.partial += vocab.Symbol(label);
  }
  return q;
}

double CtcLogMarginal(const Eigen::MatrixXd &lp, const std::vector<int> &labels) {
  const size_t T = lp.rows(), L = labels.size(), S = 2 * L + 1;
  std::vector<double> a(S, kNegInf), b(S);
  auto sym = [&](size_t s) { return s % 2 == 0 ? CharVocab::kBlank : labels[s / 2]; };
  if (T == 0) return L == 0 ? 0.0 : kNegInf;
  a[0] = lp(0, sym(0));
  if (S > 1) a[1] = lp(0, sym(1));
  for (size_t t = 1; t < T; ++t) {
    for (size_t s = 0; s < S; ++s) {
      double v = a[s];
      if (s >= 1) v = LogAdd(v, a[s - 1]);
      if (s >= 2 && sym(s) != CharVocab::kBlank && sym(s) != sym(s - 2)) v = LogAdd(v, a[s - 2]);
      b[s] = v == kNegInf ? kNegInf : v + lp(t, sym(s));
    }
    std::swap(a, b);
  }
  return S > 1 ? LogAdd(a[S - 1], a[S - 2]) : a[0];
}

}  // namespace

void DecodeConfig::Check() const {
  if (beam_width < 1) throw ConfigError("beam_width must be at least 1");
}

std::vector<int> GreedyLabels(const Eigen::MatrixXd &log_probs) {
  std::vector<int> out;
  int last = -1;
  for (Eigen::Index t = 0; t < log_probs.rows(); ++t) {
    Eigen::Index arg;
    log_probs.row(t).maxCoeff(&arg);
    int l = static_cast<int>(arg);
    if (l != last && l != CharVocab::kBlank) out.push_back(l);
    last = l;
  }
  return out;
}

std::string GreedyDecode(const Eigen::MatrixXd &log_probs, const CharVocab &vocab) {
  CheckShape(log_probs, vocab);
  return vocab.Decode(GreedyLabels(log_probs));
}

std::vector<std::string> LabelWords(const std::vector<int> &labels, const CharVocab &vocab) {
  std::vector<std::string> words;
  std::string cur;
  for (int l : labels) {
    if (l == CharVocab::kBlank) continue;
    if (l == CharVocab::kDelimiter) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += vocab.Symbol(l);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

double WordSequenceLmScore(const std::vector<std::string> &words, const ngram::NGramModel *lm) {
  if (!lm) return 0.0;
  auto state = lm->BeginState();
  double s = 0.0;
  for (const auto &w : words) s += lm->ScoreWord(state, w);
  s += lm->ScoreEnd(state);
  return s * kLn10;
}

Hypothesis ScoreLabels(const Eigen::MatrixXd &log_probs, const std::vector<int> &labels,
                       const CharVocab &vocab, const ngram::NGramModel *lm,
                       const DecodeConfig &cfg) {
  CheckShape(log_probs, vocab);
  Hypothesis h;
  h.labels = labels;
  h.text = vocab.Decode(labels);
  h.acoustic = CtcLogMarginal(log_probs, labels);
  auto words = LabelWords(labels, vocab);
  h.num_words = static_cast<int>(words.size());
  h.lm = WordSequenceLmScore(words, lm);
  h.combined = Combined(h.acoustic, h.lm, h.num_words, cfg);
  return h;
}

Hypothesis BeamDecode(const Eigen::MatrixXd &log_probs, const CharVocab &vocab,
                      const ngram::NGramModel *lm, const DecodeConfig &cfg) {
  cfg.Check();
  CheckShape(log_probs, vocab);
  const int V = vocab.size();

  std::vector<Prefix> beam(1);
  beam[0].pb = beam[0].vb = 0.0;
  if (lm) beam[0].state = lm->BeginState();

  for (Eigen::Index t = 0; t < log_probs.rows(); ++t) {
    // Ordered map keeps merging and tie-breaking deterministic.
    std::map<std::vector<int>, Prefix> next;
    auto slot = [&](const Prefix &from, int label) -> Prefix & {
      std::vector<int> key = from.labels;
      if (label >= 0) key.push_back(label);
      auto it = next.find(key);
      if (it != next.end()) return it->second;
      Prefix fresh = label >= 0 ? Extend(from, label, vocab, lm) : from;
      fresh.pb = fresh.pnb = fresh.vb = fresh.vnb = kNegInf;
      return next.emplace(std::move(key), std::move(fresh)).first->second;
    };
    for (const Prefix &p : beam) {
      double total = p.Acoustic();
      if (total == kNegInf) continue;
      double vbest = p.BestPath();
      double lb = log_probs(t, CharVocab::kBlank);
      Prefix &same = slot(p, -1);
      same.pb = LogAdd(same.pb, total + lb);
      Raise(&same.vb, vbest + lb);
      int last = p.labels.empty() ? -1 : p.labels.back();
      for (int c = 0; c < V; ++c) {
        if (c == CharVocab::kBlank) continue;
        double lp = log_probs(t, c);
        if (lp == kNegInf) continue;
        if (c == last) {
          Prefix &s = slot(p, -1);
          s.pnb = LogAdd(s.pnb, p.pnb + lp);
          Raise(&s.vnb, p.vnb + lp);
          Prefix &e = slot(p, c);
          e.pnb = LogAdd(e.pnb, p.pb + lp);
          Raise(&e.vnb, p.vb + lp);
        } else {
          Prefix &e = slot(p, c);
          e.pnb = LogAdd(e.pnb, total + lp);
          Raise(&e.vnb, vbest + lp);
        }
      }
    }
    std::vector<Prefix> cand;
    cand.reserve(next.size());
    for (auto &kv : next)
      if (kv.second.Acoustic() != kNegInf) cand.push_back(std::move(kv.second));
    // Pruning ranks prefixes by their best single path, so a width-1 beam
    // without an LM follows the greedy path exactly.  Stable sort over map
    // order makes label order the tie-break.
    std::stable_sort(cand.begin(), cand.end(), [&](const Prefix &a, const Prefix &b) {
      return Combined(a.BestPath(), a.lm, a.words, cfg) >
             Combined(b.BestPath(), b.lm, b.words, cfg);
    });
    if (cand.size() > static_cast<size_t>(cfg.beam_width)) cand.resize(cfg.beam_width);
    beam = std::move(cand);
    if (beam.empty()) break;
  }

  Hypothesis best;
  if (beam.empty()) {
    best.underflow = true;
    best.acoustic = best.combined = kNegInf;
    return best;
  }
  bool have = false;
  for (Prefix &p : beam) {
    Finish(lm, &p);
    double score = Combined(p.Acoustic(), p.lm, p.words, cfg);
    if (!have || score > best.combined || (score == best.combined && p.labels < best.labels)) {
      best.labels = p.labels;
      best.acoustic = p.Acoustic();
      best.lm = p.lm;
      best.num_words = p.words;
      best.combined = score;
      have = true;
    }
  }
  // The greedy hypothesis always competes, so the result never scores
  // below it.
  Hypothesis greedy = ScoreLabels(log_probs, GreedyLabels(log_probs), vocab, lm, cfg);
  if (greedy.combined > best.combined) return greedy;
  best.text = vocab.Decode(best.labels);
  return best;
}

}  // namespace decoder
}  // namespace m2ds2
