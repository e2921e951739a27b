// acoustic/feature-encoder.h

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

#ifndef M2DS2_ACOUSTIC_FEATURE_ENCODER_H_
#define M2DS2_ACOUSTIC_FEATURE_ENCODER_H_

#include <vector>

#include "json.hpp"
#include "m2ds2/acoustic/tape.h"

namespace m2ds2 {
namespace acoustic {

struct ConvLayerSpec {
  int channels = 0;
  int kernel = 0;
  int stride = 0;
};

// Shared by the feature and context encoders.
struct EncoderConfig {
  std::vector<ConvLayerSpec> conv_layers;
  // Inputs are precomputed T x input_dim features; convolutions are skipped.
  bool synthetic_feature_mode = true;
  int input_dim = 16;
  int model_dim = 64;
  int num_layers = 2;
  int num_heads = 2;
  int ffn_dim = 128;
  bool use_positions = true;
  int max_positions = 512;

  void Check() const;
};

// Seven-layer stack whose latents cover 400 samples (25 ms) with a
// 320-sample (20 ms) stride at 16 kHz.
std::vector<ConvLayerSpec> FullScaleConvLayers(int channels = 512);

// Output length of the conv stack, 0 when n is shorter than the receptive
// field.
long long ConvOutputLength(long long n, const std::vector<ConvLayerSpec> &layers);
long long ReceptiveField(const std::vector<ConvLayerSpec> &layers);

// Adds the frozen encoder parameters ("fe.*").
void InitFeatureEncoder(const EncoderConfig &cfg, uint64_t seed, ParameterSet *params);

// Latents z (T x model_dim).  Raw mode takes an N x 1 waveform column.
// Throws DataError for empty input or input shorter than the receptive field.
Matrix FeatureEncode(const Matrix &input, const EncoderConfig &cfg, const ParameterSet &params);

void to_json(nlohmann::json &j, const EncoderConfig &c);
void from_json(const nlohmann::json &j, EncoderConfig &c);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_FEATURE_ENCODER_H_
