// corpus/manifest.h

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

#ifndef M2DS2_CORPUS_MANIFEST_H_
#define M2DS2_CORPUS_MANIFEST_H_

#include <string>
#include <unordered_set>
#include <vector>

#include "m2ds2/corpus/utterance.h"

namespace m2ds2 {
namespace corpus {

// Ordered, id-unique list of utterances for one split.  Built once and then
// only read; all transformations return new manifests.
class Manifest {
 public:
  Manifest() = default;
  explicit Manifest(Split split) : split_(split) {}
  // Validates every entry and id uniqueness; throws DataError.
  Manifest(std::vector<Utterance> entries, Split split);

  void Add(Utterance u);

  const std::vector<Utterance> &entries() const { return entries_; }
  const Utterance &operator[](size_t i) const { return entries_[i]; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Split split() const { return split_; }
  double TotalDuration() const { return total_duration_; }

 private:
  std::vector<Utterance> entries_;
  std::unordered_set<std::string> ids_;
  Split split_ = Split::kTrain;
  double total_duration_ = 0.0;
};

// Line-delimited JSON, one object per utterance with the keys
// id, audio_path, recording_id, start, end, duration, text, speaker,
// gender, domain.  Absent optionals are written as null.
Manifest ReadManifest(const std::string &path, Split split = Split::kTrain);
void WriteManifest(const Manifest &m, const std::string &path);
std::string ManifestToString(const Manifest &m);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_MANIFEST_H_
