// acoustic/context-encoder.h

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

#ifndef M2DS2_ACOUSTIC_CONTEXT_ENCODER_H_
#define M2DS2_ACOUSTIC_CONTEXT_ENCODER_H_

#include "m2ds2/acoustic/feature-encoder.h"

namespace m2ds2 {
namespace acoustic {

// Adds "ctx.*" parameters: learned positions, pre-norm blocks, final norm.
void InitContextEncoder(const EncoderConfig &cfg, uint64_t seed, ParameterSet *params);

// Pre-norm transformer over x (T x model_dim); output has the same shape.
// Throws DataError when T exceeds max_positions with positions enabled.
Var ContextEncode(Var x, const EncoderConfig &cfg);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_CONTEXT_ENCODER_H_
