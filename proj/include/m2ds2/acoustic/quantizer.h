// acoustic/quantizer.h

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

#ifndef M2DS2_ACOUSTIC_QUANTIZER_H_
#define M2DS2_ACOUSTIC_QUANTIZER_H_

#include <vector>

#include "json.hpp"
#include "m2ds2/acoustic/tape.h"
#include "m2ds2/base/random.h"

namespace m2ds2 {
namespace acoustic {

struct QuantizerConfig {
  int num_codebooks = 2;   // G
  int codebook_size = 32;  // V
  int code_dim = 64;       // divisible by G
  double temp_start = 2.0;
  double temp_floor = 0.5;
  double temp_decay = 0.9995;  // multiplicative, per optimizer step
  double kappa = 0.1;          // similarity temperature of the contrastive loss

  void Check() const;
  double TemperatureAt(long long step) const;
};

enum class QuantizeMode {
  kInference,     // argmax of the logits, no noise
  kHard,          // Gumbel sample, one-hot forward, straight-through gradient
  kSoft,          // Gumbel sample, relaxed forward (smooth; for checks)
};

struct QuantizeOutput {
  Var q;  // T x code_dim
  // Selected entry per step and codebook, T x G.
  std::vector<std::vector<int>> indices;
  // Noise-free softmax of the logits, per codebook block: T x (G * V).
  Var probs;
};

// Adds "q.*" parameters; inputs have in_dim columns.
void InitQuantizer(const QuantizerConfig &cfg, int in_dim, uint64_t seed, ParameterSet *params);

// Quantizes z (T x in_dim).  rng is consumed only in the sampling modes.
QuantizeOutput Quantize(Var z, const QuantizerConfig &cfg, QuantizeMode mode, double temperature,
                        Rng *rng);

// Code vectors of the codebooks: the concatenation for each index tuple,
// passed through the output projection.  One row per tuple.
Matrix CodeVectors(const ParameterSet &params, const QuantizerConfig &cfg,
                   const std::vector<std::vector<int>> &indices);

// Standard Gumbel draws, row-major consumption of rng.
Matrix GumbelNoise(Eigen::Index rows, Eigen::Index cols, Rng *rng);

// Gumbel-softmax over the columns of each row of logits (not on a tape).
Matrix GumbelSoftmax(const Matrix &logits, double temperature, Rng *rng, Matrix *noise = nullptr);

void to_json(nlohmann::json &j, const QuantizerConfig &c);
void from_json(const nlohmann::json &j, QuantizerConfig &c);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_QUANTIZER_H_
