// acoustic/wav2vec-model.cc

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

#include "m2ds2/acoustic/wav2vec-model.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace acoustic {

void ModelConfig::Check() const {
  encoder.Check();
  quantizer.Check();
  if (vocab_size < 2) throw ConfigError("vocab_size must include the blank and one label");
}

void to_json(nlohmann::json &j, const ModelConfig &c) {
  j = {{"encoder", c.encoder}, {"quantizer", c.quantizer}, {"vocab_size", c.vocab_size}};
}

void from_json(const nlohmann::json &j, ModelConfig &c) {
  j.at("encoder").get_to(c.encoder);
  j.at("quantizer").get_to(c.quantizer);
  j.at("vocab_size").get_to(c.vocab_size);
}

Wav2VecModel::Wav2VecModel(const ModelConfig &cfg, uint64_t seed) : cfg_(cfg) {
  cfg_.Check();
  const int D = cfg_.encoder.model_dim, C = cfg_.quantizer.code_dim;
  InitFeatureEncoder(cfg_.encoder, seed, &params_);
  InitQuantizer(cfg_.quantizer, D, seed, &params_);
  Rng rng(DeriveSeed(seed, {0x77}));
  auto randn = [&](Eigen::Index r, Eigen::Index c, double sd) {
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = sd * StandardNormal(rng);
    return m;
  };
  params_.Add("post.weight", randn(D, D, 1.0 / std::sqrt(D)));
  params_.Add("post.bias", Matrix::Zero(1, D));
  params_.Add("mask_emb", randn(1, D, 1.0));
  InitContextEncoder(cfg_.encoder, seed, &params_);
  params_.Add("final.weight", randn(D, C, 1.0 / std::sqrt(D)));
  params_.Add("final.bias", Matrix::Zero(1, C));
  params_.Add("ctc.weight", randn(D, cfg_.vocab_size, 1.0 / std::sqrt(D)));
  params_.Add("ctc.bias", Matrix::Zero(1, cfg_.vocab_size));
}

Wav2VecModel::Wav2VecModel(const ModelConfig &cfg, ParameterSet params)
    : cfg_(cfg), params_(std::move(params)) {
  cfg_.Check();
  // Shapes are validated against a freshly initialized model.
  Wav2VecModel ref(cfg_, 0);
  if (ref.params_.size() != params_.size())
    throw DataError("parameter count does not match the model config");
  for (size_t i = 0; i < params_.size(); ++i) {
    const auto &a = ref.params_[i], &b = params_[i];
    if (a.name != b.name || a.value.rows() != b.value.rows() || a.value.cols() != b.value.cols())
      throw DataError("parameter " + b.name + " does not match the model config");
    params_[i].trainable = a.trainable;
  }
}

Matrix Wav2VecModel::Latents(const Matrix &input) const {
  return FeatureEncode(input, cfg_.encoder, params_);
}

Var Wav2VecModel::Context(Tape &tape, const Matrix &z, const std::vector<bool> &mask) const {
  Var x = AddRow(MatMul(tape.Constant(z), tape.Param("post.weight")), tape.Param("post.bias"));
  if (!mask.empty()) x = ReplaceRows(x, mask, tape.Param("mask_emb"));
  return ContextEncode(x, cfg_.encoder);
}

Var Wav2VecModel::CtcLogProbs(Tape &tape, const Matrix &z) const {
  Var c = Context(tape, z, {});
  return LogSoftmaxRows(AddRow(MatMul(c, tape.Param("ctc.weight")), tape.Param("ctc.bias")));
}

SslForward Wav2VecModel::ForwardSsl(Tape &tape, const Matrix &z, const std::vector<bool> &mask,
                                    QuantizeMode mode, double temperature, Rng *rng) const {
  SslForward out;
  Var c = Context(tape, z, mask);
  out.context = AddRow(MatMul(c, tape.Param("final.weight")), tape.Param("final.bias"));
  out.quant = Quantize(tape.Constant(z), cfg_.quantizer, mode, temperature, rng);
  return out;
}

Matrix Wav2VecModel::CtcLogProbs(const Matrix &z) const {
  Tape tape(&params_);
  return CtcLogProbs(tape, z).value();
}

std::vector<std::vector<int>> Wav2VecModel::CodeIndices(const Matrix &z) const {
  Tape tape(&params_);
  return Quantize(tape.Constant(z), cfg_.quantizer, QuantizeMode::kInference, 1.0, nullptr).indices;
}

}  // namespace acoustic
}  // namespace m2ds2
