// acoustic/quantizer.cc

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

#include "m2ds2/acoustic/quantizer.h"

#include <algorithm>
#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace acoustic {

void QuantizerConfig::Check() const {
  if (num_codebooks < 1 || codebook_size < 2) throw ConfigError("quantizer needs G >= 1, V >= 2");
  if (code_dim <= 0 || code_dim % num_codebooks != 0)
    throw ConfigError("code_dim must be a positive multiple of G");
  if (!(temp_start > 0.0) || !(temp_floor > 0.0) || !(kappa > 0.0))
    throw ConfigError("temperatures must be positive");
  if (!(temp_decay > 0.0 && temp_decay <= 1.0)) throw ConfigError("temp_decay must be in (0, 1]");
}

double QuantizerConfig::TemperatureAt(long long step) const {
  return std::max(temp_floor, temp_start * std::pow(temp_decay, static_cast<double>(step)));
}

void InitQuantizer(const QuantizerConfig &cfg, int in_dim, uint64_t seed, ParameterSet *params) {
  cfg.Check();
  Rng rng(DeriveSeed(seed, {0x9a}));
  auto randn = [&](Eigen::Index r, Eigen::Index c, double sd) {
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = sd * StandardNormal(rng);
    return m;
  };
  const int G = cfg.num_codebooks, V = cfg.codebook_size, d = cfg.code_dim / G;
  params->Add("q.logits.weight", randn(in_dim, G * V, 1.0 / std::sqrt(in_dim)));
  params->Add("q.logits.bias", Matrix::Zero(1, G * V));
  for (int g = 0; g < G; ++g)
    params->Add("q.codebook" + std::to_string(g), randn(V, d, 1.0));
  params->Add("q.proj.weight", randn(cfg.code_dim, cfg.code_dim, 1.0 / std::sqrt(cfg.code_dim)));
  params->Add("q.proj.bias", Matrix::Zero(1, cfg.code_dim));
}

Matrix GumbelNoise(Eigen::Index rows, Eigen::Index cols, Rng *rng) {
  Matrix g(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      // Keep u away from 0 so both logs stay finite.
      double u = std::max(UniformUnit(*rng), 1e-300);
      g(r, c) = -std::log(-std::log(u) + 1e-300);
    }
  return g;
}

Matrix GumbelSoftmax(const Matrix &logits, double temperature, Rng *rng, Matrix *noise) {
  Matrix g = GumbelNoise(logits.rows(), logits.cols(), rng);
  Matrix y = (logits + g) / temperature;
  for (Eigen::Index r = 0; r < y.rows(); ++r) {
    double m = y.row(r).maxCoeff();
    y.row(r) = (y.row(r).array() - m).exp().matrix();
    y.row(r) /= y.row(r).sum();
  }
  if (noise) *noise = std::move(g);
  return y;
}

namespace {
Matrix OneHotArgmax(const Matrix &m, std::vector<int> *arg) {
  Matrix h = Matrix::Zero(m.rows(), m.cols());
  arg->resize(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Eigen::Index a;
    m.row(r).maxCoeff(&a);
    h(r, a) = 1.0;
    (*arg)[r] = static_cast<int>(a);
  }
  return h;
}
}  // namespace

QuantizeOutput Quantize(Var z, const QuantizerConfig &cfg, QuantizeMode mode, double temperature,
                        Rng *rng) {
  Tape &tape = *z.tape;
  const int G = cfg.num_codebooks, V = cfg.codebook_size;
  Var logits = AddRow(MatMul(z, tape.Param("q.logits.weight")), tape.Param("q.logits.bias"));
  const Eigen::Index T = logits.rows();

  QuantizeOutput out;
  out.indices.assign(T, std::vector<int>(G, 0));
  std::vector<Var> prob_blocks, code_blocks;
  for (int g = 0; g < G; ++g) {
    Var lg = SliceCols(logits, g * V, V);
    prob_blocks.push_back(SoftmaxRows(lg));
    Var sel;
    std::vector<int> arg;
    if (mode == QuantizeMode::kInference) {
      sel = tape.Constant(OneHotArgmax(lg.value(), &arg));
    } else {
      if (rng == nullptr) throw ConfigError("sampling quantizer needs an rng");
      Matrix noise = GumbelNoise(T, V, rng);
      Var soft = SoftmaxRows(Scale(Add(lg, tape.Constant(noise)), 1.0 / temperature));
      Matrix hard = OneHotArgmax(soft.value(), &arg);
      sel = mode == QuantizeMode::kHard ? StraightThrough(hard, soft) : soft;
    }
    for (Eigen::Index t = 0; t < T; ++t) out.indices[t][g] = arg[t];
    code_blocks.push_back(MatMul(sel, tape.Param("q.codebook" + std::to_string(g))));
  }
  Var cat = G == 1 ? code_blocks[0] : ConcatCols(code_blocks);
  out.q = AddRow(MatMul(cat, tape.Param("q.proj.weight")), tape.Param("q.proj.bias"));
  out.probs = G == 1 ? prob_blocks[0] : ConcatCols(prob_blocks);
  return out;
}

Matrix CodeVectors(const ParameterSet &params, const QuantizerConfig &cfg,
                   const std::vector<std::vector<int>> &indices) {
  const int G = cfg.num_codebooks, d = cfg.code_dim / G;
  Matrix cat(static_cast<Eigen::Index>(indices.size()), cfg.code_dim);
  for (size_t t = 0; t < indices.size(); ++t) {
    if (static_cast<int>(indices[t].size()) != G) throw ConfigError("index tuple size != G");
    for (int g = 0; g < G; ++g) {
      const Matrix &cb = params.Value(params.Index("q.codebook" + std::to_string(g)));
      int v = indices[t][g];
      if (v < 0 || v >= cb.rows()) throw ConfigError("code index out of range");
      cat.row(t).segment(g * d, d) = cb.row(v);
    }
  }
  Matrix q = cat * params.Value(params.Index("q.proj.weight"));
  q.rowwise() += params.Value(params.Index("q.proj.bias")).row(0);
  return q;
}

void to_json(nlohmann::json &j, const QuantizerConfig &c) {
  j = {{"num_codebooks", c.num_codebooks}, {"codebook_size", c.codebook_size},
       {"code_dim", c.code_dim},           {"temp_start", c.temp_start},
       {"temp_floor", c.temp_floor},       {"temp_decay", c.temp_decay},
       {"kappa", c.kappa}};
}

void from_json(const nlohmann::json &j, QuantizerConfig &c) {
  j.at("num_codebooks").get_to(c.num_codebooks);
  j.at("codebook_size").get_to(c.codebook_size);
  j.at("code_dim").get_to(c.code_dim);
  j.at("temp_start").get_to(c.temp_start);
  j.at("temp_floor").get_to(c.temp_floor);
  j.at("temp_decay").get_to(c.temp_decay);
  j.at("kappa").get_to(c.kappa);
}

}  // namespace acoustic
}  // namespace m2ds2
