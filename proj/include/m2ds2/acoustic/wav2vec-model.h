// acoustic/wav2vec-model.h

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

#ifndef M2DS2_ACOUSTIC_WAV2VEC_MODEL_H_
#define M2DS2_ACOUSTIC_WAV2VEC_MODEL_H_

#include <cstdint>
#include <vector>

#include "m2ds2/acoustic/context-encoder.h"
#include "m2ds2/acoustic/feature-encoder.h"
#include "m2ds2/acoustic/quantizer.h"

namespace m2ds2 {
namespace acoustic {

struct ModelConfig {
  EncoderConfig encoder;
  QuantizerConfig quantizer;
  int vocab_size = 0;  // CTC labels including the blank at 0
  void Check() const;
};

void to_json(nlohmann::json &j, const ModelConfig &c);
void from_json(const nlohmann::json &j, ModelConfig &c);

struct SslForward {
  Var context;  // final projection of c, T x code_dim
  QuantizeOutput quant;
};

// Frozen feature encoder -> latents z -> trainable input projection ->
// (masking) -> transformer -> c.  The quantizer reads the unmasked z; the
// CTC head and the contrastive projection read c.
class Wav2VecModel {
 public:
  Wav2VecModel() = default;
  Wav2VecModel(const ModelConfig &cfg, uint64_t seed);
  Wav2VecModel(const ModelConfig &cfg, ParameterSet params);

  const ModelConfig &config() const { return cfg_; }
  const ParameterSet &params() const { return params_; }
  ParameterSet &mutable_params() { return params_; }

  // Latents z for raw samples (N x 1) or features (T x input_dim).
  Matrix Latents(const Matrix &input) const;

  // c for z with masked steps replaced by the mask embedding (mask may be
  // empty for no masking).
  Var Context(Tape &tape, const Matrix &z, const std::vector<bool> &mask) const;
  // Per-frame log-probabilities over the CTC labels, unmasked.
  Var CtcLogProbs(Tape &tape, const Matrix &z) const;
  SslForward ForwardSsl(Tape &tape, const Matrix &z, const std::vector<bool> &mask,
                        QuantizeMode mode, double temperature, Rng *rng) const;

  // Inference-only helpers (no gradients kept).
  Matrix CtcLogProbs(const Matrix &z) const;
  std::vector<std::vector<int>> CodeIndices(const Matrix &z) const;

 private:
  ModelConfig cfg_;
  ParameterSet params_;
};

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_WAV2VEC_MODEL_H_
