// corpus/utterance.h

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

#ifndef M2DS2_CORPUS_UTTERANCE_H_
#define M2DS2_CORPUS_UTTERANCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace m2ds2 {
namespace corpus {

// Which half of the training data an utterance belongs to.  Target entries
// used for adaptation carry no transcript.
enum class Domain { kSource, kTarget };
enum class Gender { kMale, kFemale };
enum class Split { kTrain, kDev, kTest };

std::string_view DomainName(Domain d);
Domain ParseDomain(std::string_view s);
std::string_view GenderName(Gender g);  // "m" / "f", as in spk2gender
Gender ParseGender(std::string_view s);
std::string_view SplitName(Split s);
Split ParseSplit(std::string_view s);

struct Utterance {
  std::string id;
  // Path to a 16 kHz mono WAV file or to a feature-matrix file (.feats).
  std::string audio_path;
  // Parent recording; defaults to the utterance id when empty.
  std::string recording_id;
  // Offsets inside the parent recording, in seconds.
  std::optional<double> start_time;
  std::optional<double> end_time;
  // Length in seconds.  Equal to end_time - start_time when both are set.
  double duration = 0.0;
  std::optional<std::string> transcript;
  Domain domain = Domain::kSource;
  std::optional<std::string> speaker;
  std::optional<Gender> gender;

  bool HasSegment() const { return start_time && end_time; }
  bool IsLabeled() const { return transcript.has_value(); }
  const std::string &RecordingId() const {
    return recording_id.empty() ? id : recording_id;
  }

  // Throws DataError when the invariants do not hold: nonempty id,
  // end_time > start_time, nonnegative duration, and source entries
  // always labeled.
  void Check() const;
};

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_UTTERANCE_H_
