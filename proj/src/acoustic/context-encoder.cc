// acoustic/context-encoder.cc

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

#include "m2ds2/acoustic/context-encoder.h"

#include <cmath>
#include <numeric>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace acoustic {

namespace {

std::string LayerName(int l, const char *what) {
  return "ctx.layer" + std::to_string(l) + "." + what;
}

Var Linear(Var x, Tape &t, const std::string &prefix) {
  return AddRow(MatMul(x, t.Param(prefix + ".weight")), t.Param(prefix + ".bias"));
}

Var Norm(Var x, Tape &t, const std::string &prefix) {
  return LayerNormRows(x, t.Param(prefix + ".gain"), t.Param(prefix + ".bias"));
}

Var SelfAttention(Var x, const EncoderConfig &cfg, Tape &t, int layer) {
  const int H = cfg.num_heads, dh = cfg.model_dim / H;
  Var q = Linear(x, t, LayerName(layer, "attn.q"));
  Var k = Linear(x, t, LayerName(layer, "attn.k"));
  Var v = Linear(x, t, LayerName(layer, "attn.v"));
  std::vector<Var> heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  for (int h = 0; h < H; ++h) {
    Var qh = SliceCols(q, h * dh, dh), kh = SliceCols(k, h * dh, dh), vh = SliceCols(v, h * dh, dh);
    Var att = SoftmaxRows(Scale(MatMul(qh, Transpose(kh)), scale));
    heads.push_back(MatMul(att, vh));
  }
  Var cat = H == 1 ? heads[0] : ConcatCols(heads);
  return Linear(cat, t, LayerName(layer, "attn.out"));
}

}  // namespace

void InitContextEncoder(const EncoderConfig &cfg, uint64_t seed, ParameterSet *params) {
  cfg.Check();
  Rng rng(DeriveSeed(seed, {0xc7}));
  auto randn = [&](Eigen::Index r, Eigen::Index c, double sd) {
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = sd * StandardNormal(rng);
    return m;
  };
  const int D = cfg.model_dim, F = cfg.ffn_dim;
  auto linear = [&](const std::string &prefix, int in, int out) {
    params->Add(prefix + ".weight", randn(in, out, 1.0 / std::sqrt(in)));
    params->Add(prefix + ".bias", Matrix::Zero(1, out));
  };
  auto norm = [&](const std::string &prefix) {
    params->Add(prefix + ".gain", Matrix::Ones(1, D));
    params->Add(prefix + ".bias", Matrix::Zero(1, D));
  };
  if (cfg.use_positions) params->Add("ctx.pos", randn(cfg.max_positions, D, 0.02));
  for (int l = 0; l < cfg.num_layers; ++l) {
    norm(LayerName(l, "ln1"));
    for (const char *p : {"attn.q", "attn.k", "attn.v", "attn.out"}) linear(LayerName(l, p), D, D);
    norm(LayerName(l, "ln2"));
    linear(LayerName(l, "ffn.in"), D, F);
    linear(LayerName(l, "ffn.out"), F, D);
  }
  norm("ctx.ln_f");
}

Var ContextEncode(Var x, const EncoderConfig &cfg) {
  Tape &t = *x.tape;
  const Eigen::Index T = x.rows();
  if (cfg.use_positions) {
    if (T > cfg.max_positions)
      throw DataError("sequence of " + std::to_string(T) + " steps exceeds max_positions");
    std::vector<int> rows(T);
    std::iota(rows.begin(), rows.end(), 0);
    x = Add(x, GatherRows(t.Param("ctx.pos"), rows));
  }
  for (int l = 0; l < cfg.num_layers; ++l) {
    Var h = Add(x, SelfAttention(Norm(x, t, LayerName(l, "ln1")), cfg, t, l));
    Var f = Linear(Gelu(Linear(Norm(h, t, LayerName(l, "ln2")), t, LayerName(l, "ffn.in"))), t,
                   LayerName(l, "ffn.out"));
    x = Add(h, f);
  }
  return Norm(x, t, "ctx.ln_f");
}

}  // namespace acoustic
}  // namespace m2ds2
