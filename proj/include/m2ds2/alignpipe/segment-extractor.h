// alignpipe/segment-extractor.h

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

#ifndef M2DS2_ALIGNPIPE_SEGMENT_EXTRACTOR_H_
#define M2DS2_ALIGNPIPE_SEGMENT_EXTRACTOR_H_

#include <map>
#include <string>
#include <vector>

#include "m2ds2/alignpipe/chunking.h"
#include "m2ds2/alignpipe/smith-waterman.h"
#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace alignpipe {

inline constexpr const char *kSpokenNoise = "<spoken-noise>";

struct AlignedSegment {
  std::string recording_id;
  double start = 0.0;
  double end = 0.0;
  std::vector<std::string> text;
  double score = 0.0;
  // Transcript index of text[0].
  size_t word_offset = 0;
  // Transcript range searched for this segment (matched document plus
  // neighbours); used when reinserting spoken-noise words.
  size_t context_begin = 0;
  size_t context_end = 0;
};

struct ExtractOptions {
  int words_per_doc = kDefaultWordsPerDocument;
  SwParams sw;
  // Minimum alignment score; negative means 2 * sw.match.
  double score_floor = -1.0;
  // Documents on either side of the TF-IDF match that are searched too.
  // Chunks routinely straddle document boundaries.
  int context_docs = 1;
  // Grow the ref span by the number of hyp words left unaligned at each end,
  // which recovers edge words lost to recognition errors.
  bool complete_boundaries = true;

  double EffectiveFloor() const { return score_floor < 0.0 ? 2.0 * sw.match : score_floor; }
};

// Aligns every chunk of one recording against the recording's transcript.
// Chunks without hypotheses, empty hypotheses, zero-similarity matches and
// alignments below the floor are dropped.  Output follows chunk order.
std::vector<AlignedSegment> ExtractSegments(const std::vector<AudioChunk> &chunks,
                                            const std::vector<std::string> &transcript,
                                            const ExtractOptions &opts = ExtractOptions());

// A speaker turn: transcript words [begin, end).
struct SpeakerRange {
  size_t begin = 0;
  size_t end = 0;
  std::string speaker;
};

// Reads "begin end speaker" lines.
std::vector<SpeakerRange> ReadSpeakerRanges(const std::string &path);

// Replaces each spoken-noise tag by the context words between its flanking
// words, provided the flank pair occurs exactly once in the context with at
// most max_gap words between.  Otherwise the tag stays.
std::vector<std::string> ReinsertSpokenNoise(const std::vector<std::string> &tokens,
                                             const std::vector<std::string> &context,
                                             size_t max_gap = 10);

struct PostprocessOptions {
  size_t min_words = 2;
  corpus::Domain domain = corpus::Domain::kSource;
  // recording id -> audio path written into the manifest.
  std::map<std::string, std::string> audio_paths;
  // When set, spoken-noise tags are resolved against this transcript.
  const std::vector<std::string> *transcript = nullptr;
};

struct PostprocessResult {
  corpus::Manifest manifest;
  double segmented_seconds = 0.0;
};

// Drops short segments, assigns each remaining one to the speaker range
// covering most of its words (ties go to the earlier range), infers gender
// and drops segments no range touches.
PostprocessResult Postprocess(const std::vector<AlignedSegment> &segments,
                              const std::vector<SpeakerRange> &speakers,
                              const PostprocessOptions &opts = PostprocessOptions());

// segmented / raw, as a fraction.  Throws ConfigError for raw <= 0.
double YieldRatio(double segmented_seconds, double raw_seconds);

// Utterance id encoding recording and centisecond bounds.
std::string SegmentId(const std::string &recording_id, double start, double end);

}  // namespace alignpipe
}  // namespace m2ds2

#endif  // M2DS2_ALIGNPIPE_SEGMENT_EXTRACTOR_H_
