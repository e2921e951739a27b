// acoustic/feature-encoder.cc

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

#include "m2ds2/acoustic/feature-encoder.h"

#include <cmath>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace acoustic {

void EncoderConfig::Check() const {
  if (model_dim <= 0 || num_layers < 0 || num_heads <= 0 || ffn_dim <= 0 || max_positions <= 0)
    throw ConfigError("encoder dimensions must be positive");
  if (model_dim % num_heads != 0) throw ConfigError("model_dim must be divisible by num_heads");
  if (synthetic_feature_mode) {
    if (input_dim <= 0) throw ConfigError("input_dim must be positive");
  } else {
    if (conv_layers.empty()) throw ConfigError("raw mode needs conv layers");
    for (const auto &l : conv_layers)
      if (l.channels <= 0 || l.kernel <= 0 || l.stride <= 0)
        throw ConfigError("conv channels, kernels and strides must be positive");
  }
}

std::vector<ConvLayerSpec> FullScaleConvLayers(int channels) {
  std::vector<ConvLayerSpec> layers = {{channels, 10, 5}};
  for (int i = 0; i < 4; ++i) layers.push_back({channels, 3, 2});
  for (int i = 0; i < 2; ++i) layers.push_back({channels, 2, 2});
  return layers;
}

long long ConvOutputLength(long long n, const std::vector<ConvLayerSpec> &layers) {
  for (const auto &l : layers) {
    if (n < l.kernel) return 0;
    n = (n - l.kernel) / l.stride + 1;
  }
  return n;
}

long long ReceptiveField(const std::vector<ConvLayerSpec> &layers) {
  long long field = 1, jump = 1;
  for (const auto &l : layers) {
    field += (l.kernel - 1) * jump;
    jump *= l.stride;
  }
  return field;
}

namespace {
Matrix RandomMatrix(Rng &rng, Eigen::Index r, Eigen::Index c, double stddev) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = stddev * StandardNormal(rng);
  return m;
}
}  // namespace

void InitFeatureEncoder(const EncoderConfig &cfg, uint64_t seed, ParameterSet *params) {
  cfg.Check();
  Rng rng(DeriveSeed(seed, {0xfe}));
  int in = 1;
  if (!cfg.synthetic_feature_mode) {
    for (size_t i = 0; i < cfg.conv_layers.size(); ++i) {
      const auto &l = cfg.conv_layers[i];
      int fan_in = in * l.kernel;
      params->Add("fe.conv" + std::to_string(i) + ".weight",
                  RandomMatrix(rng, fan_in, l.channels, std::sqrt(2.0 / fan_in)), false);
      params->Add("fe.conv" + std::to_string(i) + ".bias", Matrix::Zero(1, l.channels), false);
      in = l.channels;
    }
  } else {
    in = cfg.input_dim;
  }
  params->Add("fe.proj.weight", RandomMatrix(rng, in, cfg.model_dim, 1.0 / std::sqrt(in)), false);
  params->Add("fe.proj.bias", Matrix::Zero(1, cfg.model_dim), false);
}

Matrix FeatureEncode(const Matrix &input, const EncoderConfig &cfg, const ParameterSet &params) {
  if (input.size() == 0) throw DataError("empty audio");
  Matrix x;
  if (cfg.synthetic_feature_mode) {
    if (input.cols() != cfg.input_dim)
      throw DataError("feature dim " + std::to_string(input.cols()) + " != input_dim " +
                      std::to_string(cfg.input_dim));
    x = input;
  } else {
    if (input.cols() != 1) throw DataError("raw mode expects a single-channel waveform");
    if (ConvOutputLength(input.rows(), cfg.conv_layers) < 1)
      throw DataError("audio shorter than one receptive field (" +
                      std::to_string(ReceptiveField(cfg.conv_layers)) + " samples)");
    x = input;
    for (size_t i = 0; i < cfg.conv_layers.size(); ++i) {
      const auto &l = cfg.conv_layers[i];
      const Matrix &w = params.Value(params.Index("fe.conv" + std::to_string(i) + ".weight"));
      const Matrix &b = params.Value(params.Index("fe.conv" + std::to_string(i) + ".bias"));
      Eigen::Index out_len = (x.rows() - l.kernel) / l.stride + 1;
      const Eigen::Index in_ch = x.cols();
      // im2col: row t holds frames [t*stride, t*stride + kernel) flattened
      // frame-major.
      Matrix cols(out_len, in_ch * l.kernel);
      for (Eigen::Index t = 0; t < out_len; ++t)
        for (int k = 0; k < l.kernel; ++k)
          cols.row(t).segment(k * in_ch, in_ch) = x.row(t * l.stride + k);
      Matrix y = cols * w;
      y.rowwise() += b.row(0);
      x = y.unaryExpr([](double v) { return 0.5 * v * (1.0 + std::erf(v * M_SQRT1_2)); });
    }
  }
  Matrix z = x * params.Value(params.Index("fe.proj.weight"));
  z.rowwise() += params.Value(params.Index("fe.proj.bias")).row(0);
  return z;
}

void to_json(nlohmann::json &j, const EncoderConfig &c) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto &l : c.conv_layers) layers.push_back({l.channels, l.kernel, l.stride});
  j = {{"conv_layers", layers},
       {"synthetic_feature_mode", c.synthetic_feature_mode},
       {"input_dim", c.input_dim},
       {"model_dim", c.model_dim},
       {"num_layers", c.num_layers},
       {"num_heads", c.num_heads},
       {"ffn_dim", c.ffn_dim},
       {"use_positions", c.use_positions},
       {"max_positions", c.max_positions}};
}

void from_json(const nlohmann::json &j, EncoderConfig &c) {
  c.conv_layers.clear();
  for (const auto &l : j.at("conv_layers"))
    c.conv_layers.push_back({l.at(0).get<int>(), l.at(1).get<int>(), l.at(2).get<int>()});
  j.at("synthetic_feature_mode").get_to(c.synthetic_feature_mode);
  j.at("input_dim").get_to(c.input_dim);
  j.at("model_dim").get_to(c.model_dim);
  j.at("num_layers").get_to(c.num_layers);
  j.at("num_heads").get_to(c.num_heads);
  j.at("ffn_dim").get_to(c.ffn_dim);
  j.at("use_positions").get_to(c.use_positions);
  j.at("max_positions").get_to(c.max_positions);
}

}  // namespace acoustic
}  // namespace m2ds2
