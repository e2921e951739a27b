// trainer/train-config.cc

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

#include "m2ds2/trainer/train-config.h"

#include <functional>
#include <type_traits>
#include <vector>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace trainer {

std::string_view TrainModeName(TrainMode m) {
  switch (m) {
    case TrainMode::kSourceOnly: return "so";
    case TrainMode::kM2ds2: return "m2ds2";
    case TrainMode::kCptPretrain: return "cpt_pretrain";
    case TrainMode::kCptFinetune: return "cpt_finetune";
    case TrainMode::kPseudoLabel: return "psl";
  }
  return "?";
}

TrainMode ParseTrainMode(std::string_view s) {
  for (TrainMode m : {TrainMode::kSourceOnly, TrainMode::kM2ds2, TrainMode::kCptPretrain,
                      TrainMode::kCptFinetune, TrainMode::kPseudoLabel})
    if (TrainModeName(m) == s) return m;
  throw ConfigError("unknown training mode: " + std::string(s));
}

void TrainConfig::Check() const {
  if (!(peak_lr > 0.0)) throw ConfigError("lr must be positive");
  if (max_steps <= 0 || eval_every <= 0 || patience <= 0 || cpt_steps <= 0)
    throw ConfigError("step counts must be positive");
  if (!(warmup_fraction > 0.0 && warmup_fraction < 1.0))
    throw ConfigError("warmup_fraction must be in (0, 1)");
  if (source_batch <= 0 || target_batch < 0 || minibatch_size <= 0 || so_batch_size <= 0 ||
      cpt_batch_size <= 0)
    throw ConfigError("batch sizes must be positive");
  if (source_batch % minibatch_size != 0 || target_batch % minibatch_size != 0)
    throw ConfigError("source and target batch sizes must be multiples of minibatch_size");
  if (max_grad_norm < 0.0) throw ConfigError("max_grad_norm must be nonnegative");
  weights.Check();
  if (!(ssl.mask_prob >= 0.0 && ssl.mask_prob <= 1.0) || ssl.mask_span < 1 || ssl.num_distractors < 1)
    throw ConfigError("bad masking or distractor settings");
}

acoustic::ModelConfig DefaultModelConfig(int input_dim, int vocab_size) {
  acoustic::ModelConfig m;
  m.encoder.synthetic_feature_mode = true;
  m.encoder.input_dim = input_dim;
  m.vocab_size = vocab_size;
  return m;
}

namespace {

struct Field {
  std::function<std::string()> get;
  std::function<void(const std::string &)> set;
};

template <typename T>
Field NumField(T *p) {
  return {[p] {
            if constexpr (std::is_integral_v<T>)
              return std::to_string(*p);
            else
              return FormatShortest(*p);
          },
          [p](const std::string &v) {
            if constexpr (std::is_integral_v<T>)
              *p = static_cast<T>(ParseInt(v));
            else
              *p = static_cast<T>(ParseDouble(v));
          }};
}

Field BoolField(bool *p) {
  return {[p] { return std::string(*p ? "true" : "false"); },
          [p](const std::string &v) {
            if (v == "true" || v == "1") *p = true;
            else if (v == "false" || v == "0") *p = false;
            else throw ConfigError("expected true/false, got " + v);
          }};
}

Field QuantizeModeField(acoustic::QuantizeMode *p) {
  return {[p] {
            return std::string(*p == acoustic::QuantizeMode::kHard   ? "hard"
                               : *p == acoustic::QuantizeMode::kSoft ? "soft"
                                                                      : "inference");
          },
          [p](const std::string &v) {
            if (v == "hard") *p = acoustic::QuantizeMode::kHard;
            else if (v == "soft") *p = acoustic::QuantizeMode::kSoft;
            else throw ConfigError("quantize mode must be hard or soft");
          }};
}

std::map<std::string, Field> Fields(TrainConfig *t, acoustic::ModelConfig *m) {
  std::map<std::string, Field> f;
  f["lr"] = NumField(&t->peak_lr);
  f["max_steps"] = NumField(&t->max_steps);
  f["warmup_fraction"] = NumField(&t->warmup_fraction);
  f["eval_every"] = NumField(&t->eval_every);
  f["patience"] = NumField(&t->patience);
  f["source_batch"] = NumField(&t->source_batch);
  f["target_batch"] = NumField(&t->target_batch);
  f["minibatch_size"] = NumField(&t->minibatch_size);
  f["so_batch_size"] = NumField(&t->so_batch_size);
  f["cpt_batch_size"] = NumField(&t->cpt_batch_size);
  f["cpt_steps"] = NumField(&t->cpt_steps);
  f["max_grad_norm"] = NumField(&t->max_grad_norm);
  f["seed"] = NumField(&t->seed);
  f["adam_beta1"] = NumField(&t->adam.beta1);
  f["adam_beta2"] = NumField(&t->adam.beta2);
  f["adam_eps"] = NumField(&t->adam.eps);
  f["weight_decay"] = NumField(&t->adam.weight_decay);
  f["alpha"] = NumField(&t->weights.alpha);
  f["beta"] = NumField(&t->weights.beta);
  f["diversity_weight"] = NumField(&t->weights.diversity_weight);
  f["mask_prob"] = NumField(&t->ssl.mask_prob);
  f["mask_span"] = NumField(&t->ssl.mask_span);
  f["num_distractors"] = NumField(&t->ssl.num_distractors);
  f["quantize_mode"] = QuantizeModeField(&t->ssl.quantize_mode);
  if (m) {
    f["model.input_dim"] = NumField(&m->encoder.input_dim);
    f["model.dim"] = NumField(&m->encoder.model_dim);
    f["model.layers"] = NumField(&m->encoder.num_layers);
    f["model.heads"] = NumField(&m->encoder.num_heads);
    f["model.ffn_dim"] = NumField(&m->encoder.ffn_dim);
    f["model.positions"] = BoolField(&m->encoder.use_positions);
    f["model.max_positions"] = NumField(&m->encoder.max_positions);
    f["model.codebooks"] = NumField(&m->quantizer.num_codebooks);
    f["model.codebook_size"] = NumField(&m->quantizer.codebook_size);
    f["model.code_dim"] = NumField(&m->quantizer.code_dim);
    f["model.temp_start"] = NumField(&m->quantizer.temp_start);
    f["model.temp_floor"] = NumField(&m->quantizer.temp_floor);
    f["model.temp_decay"] = NumField(&m->quantizer.temp_decay);
    f["model.kappa"] = NumField(&m->quantizer.kappa);
  }
  return f;
}

}  // namespace

std::map<std::string, std::string> ConfigToMap(const TrainConfig &t, const acoustic::ModelConfig &m) {
  TrainConfig tc = t;
  acoustic::ModelConfig mc = m;
  std::map<std::string, std::string> kv;
  for (auto &[k, f] : Fields(&tc, &mc)) kv[k] = f.get();
  return kv;
}

void ApplyConfig(const std::map<std::string, std::string> &kv, TrainConfig *t,
                 acoustic::ModelConfig *m) {
  auto fields = Fields(t, m);
  for (const auto &[k, v] : kv) {
    auto it = fields.find(k);
    if (it == fields.end()) throw ConfigError("unknown config key: " + k);
    try {
      it->second.set(v);
    } catch (const DataError &e) {
      throw ConfigError("bad value for " + k + ": " + v);
    }
  }
}

std::map<std::string, std::string> ReadConfigFile(const std::string &path) {
  std::map<std::string, std::string> kv;
  size_t lineno = 0;
  for (const auto &raw : ReadLines(path)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = TrimWhitespace(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    kv[std::string(TrimWhitespace(line.substr(0, eq)))] =
        std::string(TrimWhitespace(line.substr(eq + 1)));
  }
  return kv;
}

void WriteConfigFile(const std::map<std::string, std::string> &kv, const std::string &path) {
  std::vector<std::string> lines;
  for (const auto &[k, v] : kv) lines.push_back(k + " = " + v);
  WriteLines(path, lines);
}

}  // namespace trainer
}  // namespace m2ds2
