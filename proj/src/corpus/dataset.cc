// corpus/dataset.cc

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

#include "m2ds2/corpus/dataset.h"

#include <unordered_map>

#include "m2ds2/base/error.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/corpus/audio-io.h"

namespace m2ds2 {
namespace corpus {

Eigen::MatrixXd LoadInput(const Utterance &u) {
  if (u.audio_path.empty()) throw DataError("utterance " + u.id + " has no audio path");
  if (IsFeaturePath(u.audio_path)) return ReadFeatureMatrix(u.audio_path);
  std::vector<float> s = ReadWav(u.audio_path, u.start_time, u.end_time);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(s.size()), 1);
  for (size_t i = 0; i < s.size(); ++i) m(i, 0) = s[i];
  return m;
}

Dataset LoadDataset(const Manifest &m) {
  Dataset d;
  d.manifest = m;
  d.inputs.resize(m.size());
  ParallelFor(m.size(), [&](size_t i) { d.inputs[i] = LoadInput(m[i]); });
  return d;
}

Dataset Dataset::Select(const Manifest &subset) const {
  std::unordered_map<std::string, size_t> pos;
  for (size_t i = 0; i < manifest.size(); ++i) pos.emplace(manifest[i].id, i);
  Dataset d;
  d.manifest = Manifest(subset.split());
  for (const auto &u : subset.entries()) {
    auto it = pos.find(u.id);
    if (it == pos.end()) throw DataError("utterance " + u.id + " not in dataset");
    d.manifest.Add(manifest[it->second]);
    d.inputs.push_back(inputs[it->second]);
  }
  return d;
}

Dataset Dataset::WithTranscripts(const std::vector<std::string> &texts) const {
  if (texts.size() != size()) throw DataError("one transcript per utterance is required");
  Dataset d;
  d.manifest = Manifest(manifest.split());
  for (size_t i = 0; i < size(); ++i) {
    Utterance u = manifest[i];
    u.transcript = texts[i];
    d.manifest.Add(std::move(u));
  }
  d.inputs = inputs;
  return d;
}

Dataset Dataset::Unlabeled() const {
  Dataset d;
  d.manifest = Manifest(manifest.split());
  for (size_t i = 0; i < size(); ++i) {
    Utterance u = manifest[i];
    if (u.domain == Domain::kSource) throw DataError("source utterances must stay labeled");
    u.transcript.reset();
    d.manifest.Add(std::move(u));
  }
  d.inputs = inputs;
  return d;
}

}  // namespace corpus
}  // namespace m2ds2
