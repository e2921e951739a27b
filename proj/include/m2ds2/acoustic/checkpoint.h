// acoustic/checkpoint.h

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

#ifndef M2DS2_ACOUSTIC_CHECKPOINT_H_
#define M2DS2_ACOUSTIC_CHECKPOINT_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "m2ds2/acoustic/wav2vec-model.h"

namespace m2ds2 {
namespace acoustic {

constexpr uint32_t kCheckpointVersion = 1;

// Binary container: magic, version, JSON metadata, named float64 tensors.
struct Checkpoint {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::pair<std::string, Matrix>> tensors;

  const Matrix *Find(const std::string &name) const;
};

void WriteCheckpoint(const Checkpoint &ckpt, const std::string &path);
// Throws DataError for a bad magic, unknown version or truncated file.
Checkpoint ReadCheckpoint(const std::string &path);

// Model parameters go under "param/<name>", the config under meta["model"].
void StoreModel(const Wav2VecModel &model, Checkpoint *ckpt);
Wav2VecModel LoadModel(const Checkpoint &ckpt);

}  // namespace acoustic
}  // namespace m2ds2

#endif  // M2DS2_ACOUSTIC_CHECKPOINT_H_
