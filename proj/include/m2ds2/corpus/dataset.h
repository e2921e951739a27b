// corpus/dataset.h

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

#ifndef M2DS2_CORPUS_DATASET_H_
#define M2DS2_CORPUS_DATASET_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace corpus {

// A manifest with its inputs loaded: an N x 1 waveform column for audio
// entries, the T x D feature matrix for feature entries.
struct Dataset {
  Manifest manifest;
  std::vector<Eigen::MatrixXd> inputs;

  size_t size() const { return inputs.size(); }
  // Entries whose ids are in `ids`, in manifest order.
  Dataset Select(const Manifest &subset) const;
  // Same entries with transcripts replaced (ids must match in order).
  Dataset WithTranscripts(const std::vector<std::string> &texts) const;
  // Same entries, transcripts dropped.
  Dataset Unlabeled() const;
};

Eigen::MatrixXd LoadInput(const Utterance &u);
Dataset LoadDataset(const Manifest &m);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_DATASET_H_
