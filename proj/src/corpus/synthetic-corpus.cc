// corpus/synthetic-corpus.cc

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

#include "m2ds2/corpus/synthetic-corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"
#include "m2ds2/corpus/audio-io.h"

namespace m2ds2 {
namespace corpus {

namespace fs = std::filesystem;

void SyntheticConfig::Check() const {
  if (num_chars < 2 || num_chars > 26) throw ConfigError("num_chars must be in [2, 26]");
  if (lexicon_size < 1 || min_word_len < 1 || max_word_len < min_word_len || min_words < 1 ||
      max_words < min_words)
    throw ConfigError("bad lexicon or sentence lengths");
  if (content_dim < 1 || nuisance_dim < 0) throw ConfigError("bad feature dims");
  if (min_char_frames < 1 || max_char_frames < min_char_frames || gap_frames < 1 || edge_frames < 0)
    throw ConfigError("bad frame counts");
  if (source_train < 1 || target_train < 1 || source_dev < 1 || target_dev < 1 || target_test < 1)
    throw ConfigError("every split needs at least one utterance");
  if (!(frame_seconds > 0.0)) throw ConfigError("frame_seconds must be positive");
}

namespace {

int UniformInt(Rng &rng, int lo, int hi) {
  return lo + static_cast<int>(UniformIndex(rng, static_cast<uint64_t>(hi - lo + 1)));
}

Eigen::MatrixXd RandomOrthogonal(Rng &rng, int n) {
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = StandardNormal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

struct Renderer {
  const SyntheticConfig &cfg;
  Eigen::MatrixXd prototypes;  // num_chars x content_dim
  Eigen::MatrixXd channel;     // content_dim x content_dim, target only
  Eigen::RowVectorXd offset;   // mean of the target background

  Eigen::MatrixXd Render(const std::string &text, Domain domain, Rng &rng) const {
    std::vector<int> frames;  // -1 = silence
    for (int i = 0; i < cfg.edge_frames; ++i) frames.push_back(-1);
    bool first = true;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t end = text.find(' ', pos);
      if (end == std::string::npos) end = text.size();
      if (!first)
        for (int i = 0; i < cfg.gap_frames; ++i) frames.push_back(-1);
      first = false;
      for (size_t k = pos; k < end; ++k) {
        int n = UniformInt(rng, cfg.min_char_frames, cfg.max_char_frames);
        for (int i = 0; i < n; ++i) frames.push_back(text[k] - 'a');
      }
      pos = end + 1;
    }
    for (int i = 0; i < cfg.edge_frames; ++i) frames.push_back(-1);

    const int T = static_cast<int>(frames.size()), C = cfg.content_dim, N = cfg.nuisance_dim;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(T, C + N);
    const bool target = domain == Domain::kTarget;
    const double noise = target ? cfg.target_noise : cfg.source_noise;
    Eigen::RowVectorXd background = Eigen::RowVectorXd::Zero(N);
    if (target)
      for (int j = 0; j < N; ++j) background(j) = offset(j) + cfg.background_scale * StandardNormal(rng);
    for (int t = 0; t < T; ++t) {
      Eigen::RowVectorXd content = Eigen::RowVectorXd::Zero(C);
      if (frames[t] >= 0) content = prototypes.row(frames[t]);
      if (target) content = content * channel;
      for (int j = 0; j < C; ++j) x(t, j) = content(j) + noise * StandardNormal(rng);
      if (target) {
        for (int j = 0; j < N; ++j) background(j) += cfg.background_drift * StandardNormal(rng);
        for (int j = 0; j < N; ++j) x(t, C + j) = background(j) + cfg.nuisance_noise * StandardNormal(rng);
      } else {
        for (int j = 0; j < N; ++j) x(t, C + j) = cfg.source_nuisance_noise * StandardNormal(rng);
      }
    }
    return x;
  }
};

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig &cfg) {
  cfg.Check();
  Rng rng(DeriveSeed(cfg.seed, {0x5e}));
  SyntheticCorpus out;

  // Lexicon of distinct words.
  for (int attempts = 0; static_cast<int>(out.lexicon.size()) < cfg.lexicon_size; ++attempts) {
    if (attempts > 100000) throw ConfigError("cannot draw enough distinct words");
    int len = UniformInt(rng, cfg.min_word_len, cfg.max_word_len);
    std::string w;
    // No doubled letters: a repeat would render as one longer character.
    while (static_cast<int>(w.size()) < len) {
      char c = static_cast<char>('a' + UniformIndex(rng, cfg.num_chars));
      if (w.empty() || w.back() != c) w.push_back(c);
    }
    if (std::find(out.lexicon.begin(), out.lexicon.end(), w) == out.lexicon.end())
      out.lexicon.push_back(w);
  }

  Renderer r{cfg, Eigen::MatrixXd(cfg.num_chars, cfg.content_dim), Eigen::MatrixXd(),
             Eigen::RowVectorXd::Zero(cfg.nuisance_dim)};
  for (Eigen::Index i = 0; i < r.prototypes.size(); ++i) r.prototypes.data()[i] = StandardNormal(rng);
  // Unit-norm prototypes scaled to sit well above the frame noise.
  for (Eigen::Index i = 0; i < r.prototypes.rows(); ++i)
    r.prototypes.row(i) *= 2.0 / r.prototypes.row(i).norm();
  Eigen::MatrixXd rot = RandomOrthogonal(rng, cfg.content_dim);
  r.channel = (1.0 - cfg.channel_mix) * Eigen::MatrixXd::Identity(cfg.content_dim, cfg.content_dim) +
              cfg.channel_mix * rot;
  if (cfg.nuisance_dim > 0) {
    for (Eigen::Index j = 0; j < r.offset.size(); ++j) r.offset(j) = StandardNormal(rng);
    r.offset *= cfg.background_offset / r.offset.norm();
  }

  auto make_split = [&](const char *name, int n, Domain domain, Split split, bool labeled,
                        std::vector<std::string> *gold) {
    Dataset d;
    d.manifest = Manifest(split);
    Rng srng(DeriveSeed(cfg.seed, {0x51, static_cast<uint64_t>(domain), static_cast<uint64_t>(split)}));
    for (int i = 0; i < n; ++i) {
      int nw = UniformInt(srng, cfg.min_words, cfg.max_words);
      std::string text;
      for (int k = 0; k < nw; ++k) {
        if (k) text.push_back(' ');
        text += out.lexicon[UniformIndex(srng, out.lexicon.size())];
      }
      Eigen::MatrixXd x = r.Render(text, domain, srng);
      Utterance u;
      char id[64];
      std::snprintf(id, sizeof(id), "%s-%05d", name, i);
      u.id = id;
      u.audio_path = std::string("feats/") + id + ".feats";
      u.duration = static_cast<double>(x.rows()) * cfg.frame_seconds;
      u.domain = domain;
      if (labeled) u.transcript = text;
      if (gold) gold->push_back(text);
      d.manifest.Add(std::move(u));
      d.inputs.push_back(std::move(x));
    }
    return d;
  };
  out.source_train = make_split("src-train", cfg.source_train, Domain::kSource, Split::kTrain, true, nullptr);
  out.source_dev = make_split("src-dev", cfg.source_dev, Domain::kSource, Split::kDev, true, nullptr);
  out.target_train = make_split("tgt-train", cfg.target_train, Domain::kTarget, Split::kTrain, false,
                                &out.target_train_gold);
  out.target_dev = make_split("tgt-dev", cfg.target_dev, Domain::kTarget, Split::kDev, true, nullptr);
  out.target_test = make_split("tgt-test", cfg.target_test, Domain::kTarget, Split::kTest, true, nullptr);
  return out;
}

void WriteSyntheticCorpus(const SyntheticCorpus &corpus, const std::string &dir) {
  fs::create_directories(fs::path(dir) / "feats");
  auto write_split = [&](const Dataset &d, const std::string &name) {
    Manifest m(d.manifest.split());
    for (size_t i = 0; i < d.size(); ++i) {
      Utterance u = d.manifest[i];
      WriteFeatureMatrix((fs::path(dir) / u.audio_path).string(), d.inputs[i]);
      u.audio_path = (fs::path(dir) / u.audio_path).string();
      m.Add(std::move(u));
    }
    WriteManifest(m, (fs::path(dir) / (name + ".jsonl")).string());
    return m;
  };
  write_split(corpus.source_train, "source_train");
  write_split(corpus.source_dev, "source_dev");
  Manifest tt = write_split(corpus.target_train, "target_train");
  write_split(corpus.target_dev, "target_dev");
  write_split(corpus.target_test, "target_test");
  Manifest gold(Split::kTrain);
  for (size_t i = 0; i < tt.size(); ++i) {
    Utterance u = tt[i];
    u.transcript = corpus.target_train_gold[i];
    gold.Add(std::move(u));
  }
  WriteManifest(gold, (fs::path(dir) / "target_train_gold.jsonl").string());
}

}  // namespace corpus
}  // namespace m2ds2
