// alignpipe/chunking.h

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

#ifndef M2DS2_ALIGNPIPE_CHUNKING_H_
#define M2DS2_ALIGNPIPE_CHUNKING_H_

#include <optional>
#include <string>
#include <vector>

namespace m2ds2 {
namespace alignpipe {

constexpr double kDefaultChunkSeconds = 30.0;
constexpr int kDefaultWordsPerDocument = 1000;

struct TimeSpan {
  double start = 0.0;
  double end = 0.0;
};

// A fixed-length slice of a long recording, optionally with the decoded
// hypothesis for it.
struct AudioChunk {
  std::string recording_id;
  double start = 0.0;
  double end = 0.0;
  std::optional<std::vector<std::string>> hypothesis;
};

// A run of consecutive transcript words.  source_offset is the index of the
// first word in the full transcript.
struct Document {
  std::string doc_id;
  std::vector<std::string> tokens;
  size_t source_offset = 0;
};

// Contiguous [k*chunk, (k+1)*chunk) intervals covering [0, duration); the
// last one holds the remainder.  Throws ConfigError for nonpositive inputs.
std::vector<TimeSpan> ChunkAudio(double duration_s, double chunk_s = kDefaultChunkSeconds);

// Tiles the transcript into documents of words_per_doc words; only the last
// may be shorter.  Throws DataError for an empty transcript.
std::vector<Document> SplitDocuments(const std::vector<std::string> &transcript,
                                     int words_per_doc = kDefaultWordsPerDocument);

// Line-delimited JSON records {recording_id, start, end, hypothesis}.
std::vector<AudioChunk> ReadChunkHypotheses(const std::string &path);
void WriteChunkHypotheses(const std::vector<AudioChunk> &chunks, const std::string &path);

}  // namespace alignpipe
}  // namespace m2ds2

#endif  // M2DS2_ALIGNPIPE_CHUNKING_H_
