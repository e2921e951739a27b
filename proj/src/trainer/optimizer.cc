// trainer/optimizer.cc

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

#include "m2ds2/trainer/optimizer.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace trainer {

using acoustic::Matrix;

AdamW::AdamW(const acoustic::ParameterSet &params, AdamWConfig cfg) : cfg_(cfg) {
  for (size_t i = 0; i < params.size(); ++i) {
    m_.push_back(Matrix::Zero(params[i].value.rows(), params[i].value.cols()));
    v_.push_back(Matrix::Zero(params[i].value.rows(), params[i].value.cols()));
  }
}

void AdamW::Step(acoustic::ParameterSet *params, const acoustic::Gradients &grads, double lr) {
  if (params->size() != m_.size() || (grads.size() != 0 && grads.size() != m_.size()))
    throw ConfigError("optimizer state does not match the parameters");
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (size_t i = 0; i < m_.size(); ++i) {
    acoustic::Parameter &p = (*params)[i];
    if (!p.trainable || grads.size() == 0 || grads[i].size() == 0) continue;
    m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * grads[i];
    v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * grads[i].cwiseAbs2();
    Matrix update = (m_[i] / bc1).array() / ((v_[i] / bc2).array().sqrt() + cfg_.eps);
    p.value -= lr * (update + cfg_.weight_decay * p.value);
  }
}

void AdamW::Store(acoustic::Checkpoint *ckpt, const acoustic::ParameterSet &params) const {
  ckpt->meta["adam_steps"] = t_;
  for (size_t i = 0; i < m_.size(); ++i) {
    ckpt->tensors.emplace_back("adam.m/" + params[i].name, m_[i]);
    ckpt->tensors.emplace_back("adam.v/" + params[i].name, v_[i]);
  }
}

void AdamW::Restore(const acoustic::Checkpoint &ckpt, const acoustic::ParameterSet &params) {
  if (!ckpt.meta.contains("adam_steps")) throw DataError("checkpoint has no optimizer state");
  t_ = ckpt.meta["adam_steps"].get<long long>();
  for (size_t i = 0; i < params.size(); ++i) {
    const Matrix *m = ckpt.Find("adam.m/" + params[i].name);
    const Matrix *v = ckpt.Find("adam.v/" + params[i].name);
    if (!m || !v) throw DataError("optimizer state missing for " + params[i].name);
    m_[i] = *m;
    v_[i] = *v;
  }
}

}  // namespace trainer
}  // namespace m2ds2
