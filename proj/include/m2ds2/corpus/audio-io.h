// corpus/audio-io.h

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

#ifndef M2DS2_CORPUS_AUDIO_IO_H_
#define M2DS2_CORPUS_AUDIO_IO_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace m2ds2 {
namespace corpus {

constexpr int kSampleRate = 16000;

// Reads 16-bit PCM WAV; throws DataError unless it is mono at 16 kHz.
// Samples are scaled to [-1, 1).  When start/end are given (seconds) only
// that slice is returned.
std::vector<float> ReadWav(const std::string &path,
                           std::optional<double> start = std::nullopt,
                           std::optional<double> end = std::nullopt);
void WriteWav(const std::string &path, const std::vector<float> &samples);

// Binary feature matrix, one row per frame:
//   "M2FEAT01" | int64 rows | int64 cols | rows*cols float64, row major.
Eigen::MatrixXd ReadFeatureMatrix(const std::string &path);
void WriteFeatureMatrix(const std::string &path, const Eigen::MatrixXd &m);

bool IsFeaturePath(const std::string &path);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_AUDIO_IO_H_
