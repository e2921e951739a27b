// corpus/dataset-dir.h

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

#ifndef M2DS2_CORPUS_DATASET_DIR_H_
#define M2DS2_CORPUS_DATASET_DIR_H_

#include <string>

#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace corpus {

// Writes a Kaldi-style data directory with the files
//   text        <utt-id> <transcript>
//   segments    <utt-id> <recording-id> <start> <end>   (two decimals)
//   utt2spk     <utt-id> <speaker>
//   spk2gender  <speaker> <m|f>
//   wav.scp     <recording-id> <audio-path>
// Lines are sorted by their first field, space separated and newline
// terminated.  Utterances without a speaker map to themselves in utt2spk;
// that is an error for segmented entries.  Speakers of unknown gender are
// left out of spk2gender.
void EmitDatasetDir(const Manifest &m, const std::string &dir);

// Inverse of EmitDatasetDir for the fields it encodes (id, times, speaker,
// gender, transcript, recording and audio path).  Domain is not stored in a
// data directory and is taken from the argument.
Manifest ReadDatasetDir(const std::string &dir, Domain domain = Domain::kSource,
                        Split split = Split::kTrain);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_DATASET_DIR_H_
